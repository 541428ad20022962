"""Integer group-ring elements over a free group, and Fox derivatives.

The derivative convention is left-to-right: d(uw) = du * aug(w) + u * dw,
which on single letters gives dg/dg = 1 and d(g^-1)/dg = -g^-1.
"""

from .words import Generator, Word, render_word


def _gen_name(g):
    return g.name if isinstance(g, Generator) else str(g)


class GroupRingElement:
    """Finite integer combination of free-group words."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for word, coeff in items:
                coeff = int(coeff)
                if coeff == 0:
                    continue
                cur = clean.get(word, 0) + coeff
                if cur:
                    clean[word] = cur
                elif word in clean:
                    del clean[word]
        self.terms = clean

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls({Word.identity(): 1})

    @classmethod
    def from_word(cls, word, coeff=1):
        return cls({word: coeff})

    @property
    def is_zero(self):
        return not self.terms

    def augmentation(self):
        return sum(self.terms.values())

    def __add__(self, other):
        if not isinstance(other, GroupRingElement):
            return NotImplemented
        out = dict(self.terms)
        for word, coeff in other.terms.items():
            cur = out.get(word, 0) + coeff
            if cur:
                out[word] = cur
            elif word in out:
                del out[word]
        e = GroupRingElement.__new__(GroupRingElement)
        e.terms = out
        return e

    def __neg__(self):
        e = GroupRingElement.__new__(GroupRingElement)
        e.terms = {w: -c for w, c in self.terms.items()}
        return e

    def __sub__(self, other):
        if not isinstance(other, GroupRingElement):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return GroupRingElement.zero()
            e = GroupRingElement.__new__(GroupRingElement)
            e.terms = {w: c * other for w, c in self.terms.items()}
            return e
        if not isinstance(other, GroupRingElement):
            return NotImplemented
        out = {}
        for wa, ca in self.terms.items():
            for wb, cb in other.terms.items():
                w = wa * wb
                cur = out.get(w, 0) + ca * cb
                if cur:
                    out[w] = cur
                elif w in out:
                    del out[w]
        e = GroupRingElement.__new__(GroupRingElement)
        e.terms = out
        return e

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def __eq__(self, other):
        return isinstance(other, GroupRingElement) and self.terms == other.terms

    def __repr__(self):
        if not self.terms:
            return "GroupRingElement(0)"
        bits = []
        for word, coeff in sorted(self.terms.items(), key=lambda t: t[0].letters):
            text = render_word(word) or "1"
            bits.append(f"{coeff}*{text}")
        return "GroupRingElement(" + " + ".join(bits) + ")"


def augmentation(e):
    """Sum of the coefficients of a group-ring element."""
    return e.augmentation()


def fox_derivative(word, gen):
    """Left-to-right Fox derivative of ``word`` with respect to one generator."""
    name = _gen_name(gen)
    terms = {}
    prefix = []
    for lname, sign in word.letters:
        if lname == name:
            if sign > 0:
                piece = Word._from_reduced(tuple(prefix))
            else:
                # The prefix of a reduced word cannot end in (name, +1) when the
                # next letter is (name, -1), so appending stays reduced.
                piece = Word._from_reduced(tuple(prefix) + ((name, -1),))
            cur = terms.get(piece, 0) + sign
            if cur:
                terms[piece] = cur
            elif piece in terms:
                del terms[piece]
        prefix.append((lname, sign))
    e = GroupRingElement.__new__(GroupRingElement)
    e.terms = terms
    return e


def fox_derivative_power(base, k, gen):
    """Fox derivative of base**k via the geometric-sum identity, for k >= 0.

    d(v^k)/dg = (1 + v + ... + v^(k-1)) * dv/dg; used as an independent check
    against the letter-by-letter computation.
    """
    if k < 0:
        raise ValueError("geometric-sum form is stated for nonnegative powers")
    geo = GroupRingElement.zero()
    power = Word.identity()
    for _ in range(k):
        geo = geo + GroupRingElement.from_word(power)
        power = power * base
    return geo * fox_derivative(base, gen)
