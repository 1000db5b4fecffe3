"""The non-commutative algebra H_t = Q<x, y>[t] and its products and maps.

Words are strings over ``"xy"``.  Through ``z_k = y x^(k-1)`` the words that
are empty or start with ``y`` (the subalgebra H^1) correspond to indices.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product
from typing import Sequence

from .combo import Combo
from .indices import Index, IndexCombo, check_index
from .tpoly import ONE, T, TPoly

Word = str


class DomainError(ValueError):
    """A monomial lies outside the domain of a map."""

    def __init__(self, op: str, word: Word, domain: str):
        super().__init__(f"{op}: monomial {word!r} is not in {domain}")
        self.op = op
        self.word = word
        self.domain = domain


def check_word(w: str) -> Word:
    if not isinstance(w, str) or w.strip("xy"):
        raise ValueError(f"words are strings over 'x' and 'y', got {w!r}")
    return w


class WordCombo(Combo):
    """Element of H_t; the product is concatenation of words."""

    __slots__ = ()
    key_field = "word"

    @classmethod
    def check_key(cls, key) -> Word:
        return check_word(key)

    @staticmethod
    def sort_key(key: Word):
        return (len(key), key)

    @staticmethod
    def format_key(key: Word) -> str:
        return key

    @staticmethod
    def parse_key(text: str) -> Word:
        return check_word(text)

    @classmethod
    def from_counts(cls, counts) -> WordCombo:
        items = counts.items() if hasattr(counts, "items") else counts
        return cls.from_graded((w, 0, c) for w, c in items)

    @classmethod
    def of(cls, *words: str) -> WordCombo:
        return cls.from_counts((check_word(w), 1) for w in words)


def _unit() -> WordCombo:
    return WordCombo.from_counts({"": 1})


# -- membership ---------------------------------------------------------------

def in_h1(w: Word) -> bool:
    return not w or w[0] == "y"


def in_h0(w: Word) -> bool:
    return not w or (w[0] == "y" and w[-1] == "x")


def in_yhx(w: Word) -> bool:
    return bool(w) and w[0] == "y" and w[-1] == "x"


def require(v: WordCombo, pred, op: str, domain: str) -> None:
    for w in v.keys():
        if not pred(w):
            raise DomainError(op, w, domain)


# -- z-encoding ---------------------------------------------------------------

def z_encode(k: Sequence[int]) -> Word:
    return "".join("y" + "x" * (part - 1) for part in check_index(k))


def z_decode(w: Word) -> Index:
    if not in_h1(w):
        raise DomainError("z_decode", w, "H^1")
    if not w:
        return ()
    return tuple(len(block) + 1 for block in w[1:].split("y"))


def z_convert(v):
    """Index (combo) to word (combo) and back, linear over Q[t]."""
    if isinstance(v, IndexCombo):
        return v.map_keys(z_encode, WordCombo)
    if isinstance(v, WordCombo):
        require(v, in_h1, "z_convert", "H^1")
        return v.map_keys(z_decode, IndexCombo)
    if isinstance(v, str):
        return z_decode(check_word(v))
    return z_encode(v)


# -- letter substitutions -------------------------------------------------------

def _substitute(word: Word, images: dict) -> dict:
    """Expand an algebra endomorphism letterwise: images[letter] = [(word, coeff)]."""
    cur = {"": ONE}
    for letter in word:
        nxt: dict = {}
        for prefix, c in cur.items():
            for piece, c2 in images[letter]:
                key = prefix + piece
                val = nxt[key] + c * c2 if key in nxt else c * c2
                if val:
                    nxt[key] = val
                else:
                    nxt.pop(key, None)
        cur = nxt
    return cur


@lru_cache(maxsize=None)
def _sigma_word(word: Word, sign: int) -> WordCombo:
    ys = [i for i, a in enumerate(word) if a == "y"]
    graded = []
    for choice in product((0, 1), repeat=len(ys)):
        letters = list(word)
        for i, flip in zip(ys, choice):
            if flip:
                letters[i] = "x"
        n = sum(choice)
        graded.append(("".join(letters), n, sign ** n))
    return WordCombo.from_graded(graded)


def sigma_sub(w: WordCombo, c=T) -> WordCombo:
    """Endomorphism x -> x, y -> c x + y."""
    c = TPoly.coerce(c)
    if c == T or c == -T:
        sign = 1 if c == T else -1
        return w.apply(lambda word: _sigma_word(word, sign), WordCombo)
    images = {"x": [("x", ONE)], "y": [("x", c), ("y", ONE)]}
    return w.apply(lambda word: WordCombo._trusted(_substitute(word, images)), WordCombo)


@lru_cache(maxsize=None)
def _s_word(word: Word, sign: int) -> WordCombo:
    if not word:
        return _unit()
    if word[0] != "y":
        raise DomainError("s_transform", word, "H^1_t")
    rest = _sigma_word(word[1:], sign)
    return rest.map_keys(lambda u: "y" + u)


def s_transform(w: WordCombo, sign: int = 1) -> WordCombo:
    """S_t (sign=+1) or its inverse S_{-t} (sign=-1): S(yu) = y sigma(u)."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    return w.apply(lambda word: _s_word(word, sign), WordCombo)


# -- products -----------------------------------------------------------------

@lru_cache(maxsize=None)
def _stuffle(a: Index, b: Index) -> dict:
    if not a:
        return {b: 1}
    if not b:
        return {a: 1}
    out: dict = {}
    for head, sub in ((a[0], _stuffle(a[1:], b)), (b[0], _stuffle(a, b[1:])), (a[0] + b[0], _stuffle(a[1:], b[1:]))):
        for rest, c in sub.items():
            key = (head,) + rest
            out[key] = out.get(key, 0) + c
    return out


def _stuffle_words(u: Word, v: Word) -> WordCombo:
    counts = _stuffle(z_decode(u), z_decode(v))
    return WordCombo.from_counts((z_encode(k), c) for k, c in counts.items())


def harmonic(u: WordCombo, v: WordCombo) -> WordCombo:
    """The quasi-shuffle product on H^1_t."""
    require(u, in_h1, "harmonic", "H^1_t")
    require(v, in_h1, "harmonic", "H^1_t")
    return u.bilinear(v, _stuffle_words, WordCombo)


@lru_cache(maxsize=None)
def _shuffle_words(a: Word, b: Word) -> dict:
    if not a:
        return {b: 1}
    if not b:
        return {a: 1}
    out: dict = {}
    for head, sub in ((a[0], _shuffle_words(a[1:], b)), (b[0], _shuffle_words(a, b[1:]))):
        for rest, c in sub.items():
            key = head + rest
            out[key] = out.get(key, 0) + c
    return out


def shuffle(u: WordCombo, v: WordCombo) -> WordCombo:
    return u.bilinear(v, lambda a, b: WordCombo.from_counts(_shuffle_words(a, b)), WordCombo)


def t_harmonic(u: WordCombo, v: WordCombo) -> WordCombo:
    """t-harmonic product, defined by conjugating the harmonic product with S_t."""
    require(u, in_h1, "t_harmonic", "H^1_t")
    require(v, in_h1, "t_harmonic", "H^1_t")
    return s_transform(harmonic(s_transform(u), s_transform(v)), -1)


_ONE_MINUS_2T = TPoly((1, -2))
_T2_MINUS_T = TPoly((0, -1, 1))


@lru_cache(maxsize=None)
def _t_stuffle(a: Index, b: Index) -> IndexCombo:
    if not a:
        return IndexCombo.from_counts({b: 1})
    if not b:
        return IndexCombo.from_counts({a: 1})
    k, l = a[0], b[0]
    w1, w2 = a[1:], b[1:]
    inner = _t_stuffle(w1, w2)
    parts = [
        _t_stuffle(w1, b).map_keys(lambda r: (k,) + r),
        _t_stuffle(a, w2).map_keys(lambda r: (l,) + r),
        inner.map_keys(lambda r: (k + l,) + r).scale(_ONE_MINUS_2T),
    ]
    if w1 or w2:
        # y x^(k+l) L_y^{-1}(...): merge k+l into the leading part
        parts.append(inner.map_keys(lambda r: (k + l + r[0],) + r[1:]).scale(_T2_MINUS_T))
    return IndexCombo.sum(parts)


def t_harmonic_recursive(u: WordCombo, v: WordCombo) -> WordCombo:
    """Four-term recursion for the t-harmonic product (merge reading of the t^2 - t term)."""
    require(u, in_h1, "t_harmonic_recursive", "H^1_t")
    require(v, in_h1, "t_harmonic_recursive", "H^1_t")
    return u.bilinear(v, lambda a, b: z_convert(_t_stuffle(z_decode(a), z_decode(b))), WordCombo)


def t_shuffle(u: WordCombo, v: WordCombo) -> WordCombo:
    """t-shuffle product, defined by conjugating the shuffle product with S_t."""
    require(u, in_h1, "t_shuffle", "H^1_t")
    require(v, in_h1, "t_shuffle", "H^1_t")
    return s_transform(shuffle(s_transform(u), s_transform(v)), -1)


@lru_cache(maxsize=None)
def _t_shuffle_rec(a: Word, b: Word) -> WordCombo:
    if not a:
        return WordCombo.from_counts({b: 1})
    if not b:
        return WordCombo.from_counts({a: 1})
    parts = [
        _t_shuffle_rec(a[1:], b).map_keys(lambda r: a[0] + r),
        _t_shuffle_rec(a, b[1:]).map_keys(lambda r: b[0] + r),
    ]
    if a == "y":
        parts.append(WordCombo.monomial("y" + b, -T))
    if b == "y":
        parts.append(WordCombo.monomial("y" + a, -T))
    return WordCombo.sum(parts)


def t_shuffle_recursive(u: WordCombo, v: WordCombo) -> WordCombo:
    """EXPERIMENTAL: the rho/delta recursion for the t-shuffle product.

    Differs from ``t_shuffle`` as an element of H_t already on (y, y); kept
    only for side-by-side comparison.
    """
    return u.bilinear(v, _t_shuffle_rec, WordCombo)


# -- involutions and dualities --------------------------------------------------

@lru_cache(maxsize=None)
def _nu_word(word: Word) -> WordCombo:
    k = z_decode(word)
    return WordCombo.from_counts({z_encode(k[::-1]): (-1) ** sum(k)})


def nu_map(w: WordCombo) -> WordCombo:
    """nu(z_k1 ... z_kr) = (-1)^(k1+...+kr) z_kr ... z_k1."""
    require(w, in_h1, "nu_map", "H^1_t")
    return w.apply(_nu_word, WordCombo)


_PHI_IMAGES = {"x": [("x", ONE), ("y", ONE)], "y": [("y", -ONE)]}


@lru_cache(maxsize=None)
def _phi_word(word: Word) -> WordCombo:
    return WordCombo._trusted(_substitute(word, _PHI_IMAGES))


def phi_word(w: WordCombo) -> WordCombo:
    """Automorphism x -> x + y, y -> -y."""
    return w.apply(_phi_word, WordCombo)


def phi_t(w: WordCombo) -> WordCombo:
    """phi^t = -S_{-t} o phi o S_t."""
    require(w, in_h1, "phi_t", "H^1_t")
    middle = phi_word(s_transform(w))
    require(middle, in_h1, "phi_t (after phi o S_t)", "H^1_t")
    return -s_transform(middle, -1)


_ALPHA = str.maketrans("xy", "yx")


def alpha_tilde(w: WordCombo) -> WordCombo:
    """alpha~(y u) = y alpha(u), alpha swapping x and y."""
    require(w, lambda u: u.startswith("y"), "alpha_tilde", "yH_t")
    return w.map_keys(lambda u: "y" + u[1:].translate(_ALPHA))


# -- derivations ----------------------------------------------------------------

@lru_cache(maxsize=None)
def _derivation_image(l: int) -> dict:
    """Images of x under d_l: y (x+y)^(l-1) x."""
    return {"y" + "".join(mid) + "x": 1 for mid in product("xy", repeat=l - 1)}


@lru_cache(maxsize=None)
def _derive_word(word: Word, l: int) -> WordCombo:
    img = _derivation_image(l)
    graded = []
    for i, a in enumerate(word):
        sign = 1 if a == "x" else -1
        pre, post = word[:i], word[i + 1:]
        for piece in img:
            graded.append((pre + piece + post, 0, sign))
    return WordCombo.from_graded(graded)


def derivation(w: WordCombo, l: int, twisted: bool = False) -> WordCombo:
    """d_l with d_l(x) = y(x+y)^(l-1)x = -d_l(y); twisted: S_{-t} o d_l o S_t."""
    if l < 1:
        raise ValueError("derivation order must be positive")
    if not twisted:
        return w.apply(lambda word: _derive_word(word, l), WordCombo)
    require(w, in_h1, "derivation (twisted)", "H^1_t")
    return s_transform(derivation(s_transform(w), l), -1)


# -- affix maps -----------------------------------------------------------------

def ly(w: WordCombo) -> WordCombo:
    return w.map_keys(lambda u: "y" + u)


def ly_inv(w: WordCombo) -> WordCombo:
    require(w, lambda u: u.startswith("y"), "L_y^{-1}", "yH_t")
    return w.map_keys(lambda u: u[1:])


def rx_inv(w: WordCombo) -> WordCombo:
    require(w, lambda u: u.endswith("x"), "R_x^{-1}", "H_t x")
    return w.map_keys(lambda u: u[:-1])


_AFFIX = {"Ly": ly, "LyInv": ly_inv, "RxInv": rx_inv}


def affix_ops(w: WordCombo, which: str) -> WordCombo:
    try:
        return _AFFIX[which](w)
    except KeyError:
        raise ValueError(f"unknown affix map {which!r}; expected one of {sorted(_AFFIX)}") from None


def words_up_to(max_len: int, min_len: int = 0) -> list[Word]:
    """All words of length in [min_len, max_len], by length then lexicographically."""
    return ["".join(p) for n in range(min_len, max_len + 1) for p in product("xy", repeat=n)]
