"""Evaluate the t-duality residual on H^1 words outside yH_t x.

The suite asserts the relation only on yH_t x and the empty word.  Here we
record what happens on words ending in y: either phi o S_t leaves H^1 (the
residual is not defined) or the residual is evaluated at each prime.
"""

import argparse

from tfmzv.fp import PrimeCtx, odd_primes, z_map_word
from tfmzv.words import DomainError, WordCombo, in_yhx, phi_t, words_up_to


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-length", type=int, default=6)
    ap.add_argument("--prime-min", type=int, default=11)
    ap.add_argument("--prime-max", type=int, default=97)
    args = ap.parse_args()

    ctxs = [PrimeCtx(p) for p in odd_primes(args.prime_min, args.prime_max)]
    counts = {"holds": 0, "fails": 0, "undefined": 0}
    for w in words_up_to(args.max_length, 1):
        if w[0] != "y" or in_yhx(w):
            continue
        v = WordCombo.of(w)
        try:
            residual = v + phi_t(v)
        except DomainError as exc:
            counts["undefined"] += 1
            print(f"{w:8s} undefined: {exc}")
            continue
        bad = [c.p for c in ctxs if c.p >= len(w) + 3 and not z_map_word(c, residual).is_zero()]
        counts["fails" if bad else "holds"] += 1
        print(f"{w:8s} {'fails at ' + str(bad[:6]) if bad else 'holds at every tested prime'}")
    print(counts)


if __name__ == "__main__":
    main()
