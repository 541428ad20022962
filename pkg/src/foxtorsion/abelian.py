"""Abelianization via Smith normal form, and exact multivariate Laurent arithmetic.

The free part of the abelianized group is presented as Z^r; a group-ring
element maps to a Laurent polynomial whose exponent vectors are the signed
sums of generator images.  All arithmetic is exact over the integers; the
term-dict inner loops live in the kernel backend selected by `_kernels`.
"""

from .errors import (
    InexactDivision,
    InvalidBasis,
    NontrivialTorsion,
    RankMismatch,
    UnknownGenerator,
)
from ._kernels import add_terms, iadd_scaled, mul_terms
from .groupring import GroupRingElement
from .words import Word, render_word


# ---------------------------------------------------------------------------
# integer matrices


def _identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def smith_normal_form(matrix):
    """Smith normal form of an integer matrix.

    Returns (D, U, V) with U * matrix * V = D, U and V unimodular, and D
    diagonal with nonnegative entries satisfying d1 | d2 | ... .
    """
    A = [[int(x) for x in row] for row in matrix]
    m = len(A)
    n = len(A[0]) if m else 0
    if any(len(row) != n for row in A):
        raise ValueError("ragged matrix")
    U = _identity(m)
    V = _identity(n)

    def row_op(i, j, q):  # row_i -= q * row_j
        for c in range(n):
            A[i][c] -= q * A[j][c]
        for c in range(m):
            U[i][c] -= q * U[j][c]

    def col_op(i, j, q):  # col_i -= q * col_j
        for r in range(m):
            A[r][i] -= q * A[r][j]
        for r in range(n):
            V[r][i] -= q * V[r][j]

    def row_swap(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def col_swap(i, j):
        for r in range(m):
            A[r][i], A[r][j] = A[r][j], A[r][i]
        for r in range(n):
            V[r][i], V[r][j] = V[r][j], V[r][i]

    t = 0
    while t < min(m, n):
        # pick the nonzero entry of smallest magnitude as pivot
        best = None
        for i in range(t, m):
            for j in range(t, n):
                if A[i][j] != 0 and (best is None or abs(A[i][j]) < abs(A[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        row_swap(t, best[0])
        col_swap(t, best[1])

        dirty = False
        for i in range(t + 1, m):
            if A[i][t]:
                q = A[i][t] // A[t][t]
                row_op(i, t, q)
                if A[i][t]:
                    dirty = True
        for j in range(t + 1, n):
            if A[t][j]:
                q = A[t][j] // A[t][t]
                col_op(j, t, q)
                if A[t][j]:
                    dirty = True
        if dirty:
            continue

        # enforce the divisibility chain before moving on
        stuck = False
        for i in range(t + 1, m):
            for j in range(t + 1, n):
                if A[i][j] % A[t][t]:
                    row_op(t, i, -1)
                    stuck = True
                    break
            if stuck:
                break
        if stuck:
            continue
        if A[t][t] < 0:
            for c in range(n):
                A[t][c] = -A[t][c]
            for c in range(m):
                U[t][c] = -U[t][c]
        t += 1

    return A, U, V


def integer_determinant(matrix):
    """Exact determinant of a square integer matrix (fraction-free elimination)."""
    A = [[int(x) for x in row] for row in matrix]
    n = len(A)
    if any(len(row) != n for row in A):
        raise ValueError("matrix is not square")
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k][k] == 0:
            for i in range(k + 1, n):
                if A[i][k] != 0:
                    A[k], A[i] = A[i], A[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
            A[i][k] = 0
        prev = A[k][k]
    return sign * A[n - 1][n - 1]


def integer_rank(matrix):
    """Rank over Q of an integer matrix, computed exactly."""
    D, _, _ = smith_normal_form(matrix)
    m = len(D)
    n = len(D[0]) if m else 0
    return sum(1 for i in range(min(m, n)) if D[i][i] != 0)


# ---------------------------------------------------------------------------
# Laurent polynomials


def grlex_key(exponents):
    """Graded-lexicographic sort key: total degree first, then lexicographic."""
    return (sum(exponents), exponents)


class LaurentPoly:
    """Finitely supported integer Laurent polynomial on exponent vectors in Z^r."""

    __slots__ = ("rank", "terms")

    def __init__(self, rank, terms=None):
        self.rank = int(rank)
        clean = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for exps, coeff in items:
                coeff = int(coeff)
                if coeff == 0:
                    continue
                exps = tuple(int(e) for e in exps)
                if len(exps) != self.rank:
                    raise RankMismatch(
                        f"exponent vector {exps} has length {len(exps)}, expected {self.rank}"
                    )
                cur = clean.get(exps, 0) + coeff
                if cur:
                    clean[exps] = cur
                elif exps in clean:
                    del clean[exps]
        self.terms = clean

    @classmethod
    def _raw(cls, rank, terms):
        p = cls.__new__(cls)
        p.rank = rank
        p.terms = terms
        return p

    @classmethod
    def zero(cls, rank):
        return cls._raw(rank, {})

    @classmethod
    def one(cls, rank):
        return cls._raw(rank, {(0,) * rank: 1})

    @classmethod
    def constant(cls, rank, value):
        value = int(value)
        return cls._raw(rank, {(0,) * rank: value} if value else {})

    @classmethod
    def monomial(cls, exps, coeff=1):
        coeff = int(coeff)
        exps = tuple(int(e) for e in exps)
        return cls._raw(len(exps), {exps: coeff} if coeff else {})

    @property
    def is_zero(self):
        return not self.terms

    def _check_rank(self, other):
        if self.rank != other.rank:
            raise RankMismatch(f"rank {self.rank} vs {other.rank}")

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.constant(self.rank, other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        self._check_rank(other)
        return LaurentPoly._raw(self.rank, add_terms(self.terms, other.terms))

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw(self.rank, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.constant(self.rank, other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return LaurentPoly.zero(self.rank)
            return LaurentPoly._raw(
                self.rank, {k: v * other for k, v in self.terms.items()}
            )
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        self._check_rank(other)
        return LaurentPoly._raw(self.rank, mul_terms(self.terms, other.terms))

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("only nonnegative integer powers are defined")
        out = LaurentPoly.one(self.rank)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base if k > 1 else base
            k >>= 1
        return out

    def __eq__(self, other):
        return (
            isinstance(other, LaurentPoly)
            and self.rank == other.rank
            and self.terms == other.terms
        )

    def coefficient_sum(self):
        return sum(self.terms.values())

    def support(self):
        return frozenset(self.terms)

    def min_exponents(self):
        if not self.terms:
            raise ValueError("the zero polynomial has no exponents")
        return tuple(min(e[i] for e in self.terms) for i in range(self.rank))

    def shifted(self, offset):
        offset = tuple(int(o) for o in offset)
        if len(offset) != self.rank:
            raise RankMismatch(f"offset length {len(offset)}, expected {self.rank}")
        return LaurentPoly._raw(
            self.rank,
            {tuple(a + b for a, b in zip(k, offset)): v for k, v in self.terms.items()},
        )

    def reflected(self):
        """Exponent-wise negation (the inversion map on the grading group)."""
        return LaurentPoly._raw(
            self.rank, {tuple(-e for e in k): v for k, v in self.terms.items()}
        )

    def exact_div(self, divisor):
        """Exact quotient self / divisor in the Laurent ring.

        Both operands are shifted to ordinary polynomials; repeated extraction
        of graded-lex leading terms then either terminates with zero remainder
        or proves inexactness (a leading monomial the divisor cannot reach).
        """
        if not isinstance(divisor, LaurentPoly):
            divisor = LaurentPoly.constant(self.rank, divisor)
        self._check_rank(divisor)
        if divisor.is_zero:
            raise InexactDivision("division by zero")
        if self.is_zero:
            return LaurentPoly.zero(self.rank)
        smin = self.min_exponents()
        dmin = divisor.min_exponents()
        rem = {
            tuple(a - b for a, b in zip(k, smin)): v for k, v in self.terms.items()
        }
        den = {
            tuple(a - b for a, b in zip(k, dmin)): v for k, v in divisor.terms.items()
        }
        dlead = max(den, key=grlex_key)
        dcoeff = den[dlead]
        quot = {}
        while rem:
            lead = max(rem, key=grlex_key)
            qexp = tuple(a - b for a, b in zip(lead, dlead))
            if any(e < 0 for e in qexp):
                raise InexactDivision("leading monomial not divisible")
            qc, r = divmod(rem[lead], dcoeff)
            if r:
                raise InexactDivision("leading coefficient not divisible")
            quot[qexp] = qc
            iadd_scaled(rem, den, qexp, -qc)
        shift = tuple(a - b for a, b in zip(smin, dmin))
        return LaurentPoly._raw(
            self.rank,
            {tuple(a + b for a, b in zip(k, shift)): v for k, v in quot.items()},
        )

    def substitute(self, images, offset=None):
        """Monomial substitution: variable i maps to the monomial with exponent images[i].

        ``images`` must contain one target-ring exponent vector per source
        variable; ``offset`` is an optional extra translation.  This is the
        ring homomorphism induced by an integer matrix plus offset.
        """
        images = [tuple(int(e) for e in img) for img in images]
        if len(images) != self.rank:
            raise RankMismatch(
                f"{len(images)} variable images for rank {self.rank}"
            )
        target = len(images[0]) if images else (len(offset) if offset else 0)
        if any(len(img) != target for img in images):
            raise RankMismatch("variable images have inconsistent ranks")
        if offset is None:
            offset = (0,) * target
        offset = tuple(int(o) for o in offset)
        if len(offset) != target:
            raise RankMismatch("offset rank does not match the target ring")
        out = {}
        for exps, coeff in self.terms.items():
            acc = list(offset)
            for e, img in zip(exps, images):
                if e:
                    for i in range(target):
                        acc[i] += e * img[i]
            key = tuple(acc)
            cur = out.get(key, 0) + coeff
            if cur:
                out[key] = cur
            elif key in out:
                del out[key]
        return LaurentPoly._raw(target, out)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: grlex_key(t[0]))

    def render(self, names):
        """Human-readable form with the given variable names, graded-lex order."""
        if len(names) != self.rank:
            raise RankMismatch(f"{len(names)} names for rank {self.rank}")
        if not self.terms:
            return "0"
        pieces = []
        for exps, coeff in self.sorted_terms():
            factors = []
            for name, e in zip(names, exps):
                if e == 1:
                    factors.append(str(name))
                elif e:
                    factors.append(f"{name}^{e}")
            mono = "*".join(factors)
            mag = abs(coeff)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if not pieces:
                pieces.append(("-" if coeff < 0 else "") + body)
            else:
                pieces.append(("- " if coeff < 0 else "+ ") + body)
        return " ".join(pieces)

    def __repr__(self):
        names = [f"x{i}" for i in range(self.rank)]
        return f"LaurentPoly[{self.rank}]({self.render(names)})"


# ---------------------------------------------------------------------------
# abelianization maps


class AbelianizationMap:
    """Generator images in Z^r inducing the ring map onto the free abelianization."""

    def __init__(self, rank, images, basis_names=None):
        self.rank = int(rank)
        self.images = {
            str(name): tuple(int(e) for e in vec) for name, vec in dict(images).items()
        }
        for name, vec in self.images.items():
            if len(vec) != self.rank:
                raise RankMismatch(
                    f"image of {name!r} has length {len(vec)}, expected {self.rank}"
                )
        if basis_names is None:
            basis_names = tuple(f"t{i + 1}" for i in range(self.rank))
        self.basis_names = tuple(str(n) for n in basis_names)
        if len(self.basis_names) != self.rank:
            raise RankMismatch("one basis name per coordinate is required")

    def word_exponents(self, word):
        acc = [0] * self.rank
        for name, sign in word.letters:
            img = self.images.get(name)
            if img is None:
                raise UnknownGenerator(f"no abelianized image for generator {name!r}")
            for i in range(self.rank):
                acc[i] += sign * img[i]
        return tuple(acc)

    def __call__(self, element):
        """Apply the induced ring map to a Word or GroupRingElement."""
        if isinstance(element, Word):
            element = GroupRingElement.from_word(element)
        out = {}
        for word, coeff in element.terms.items():
            key = self.word_exponents(word)
            cur = out.get(key, 0) + coeff
            if cur:
                out[key] = cur
            elif key in out:
                del out[key]
        return LaurentPoly._raw(self.rank, out)

    def __eq__(self, other):
        return (
            isinstance(other, AbelianizationMap)
            and self.rank == other.rank
            and self.images == other.images
            and self.basis_names == other.basis_names
        )

    def __repr__(self):
        imgs = ", ".join(f"{n}->{v}" for n, v in sorted(self.images.items()))
        return f"AbelianizationMap(rank={self.rank}, {imgs})"


def _relator_vectors(presentation):
    names = presentation.generator_names
    index = {n: i for i, n in enumerate(names)}
    vectors = []
    for rel in presentation.relators:
        vec = [0] * len(names)
        for name, sign in rel.letters:
            vec[index[name]] += sign
        vectors.append(vec)
    return vectors


def abelianize_presentation(presentation, user_basis=None):
    """Free-part abelianization of a presentation.

    Without ``user_basis`` the basis comes from the Smith normal form of the
    relator exponent matrix; a finite cyclic factor raises NontrivialTorsion.
    A supplied basis is validated (kills every relator, generates Z^r) and
    returned verbatim.
    """
    names = presentation.generator_names
    vectors = _relator_vectors(presentation)

    if user_basis is not None:
        for name in names:
            if name not in user_basis.images:
                raise InvalidBasis(f"user basis has no image for generator {name!r}")
        for rel, vec in zip(presentation.relators, vectors):
            image = [0] * user_basis.rank
            for name, count in zip(names, vec):
                img = user_basis.images[name]
                for i in range(user_basis.rank):
                    image[i] += count * img[i]
            if any(image):
                raise InvalidBasis(
                    f"user basis does not kill relator {render_word(rel)!r}"
                )
        if user_basis.rank:
            gmat = [
                [user_basis.images[name][i] for name in names]
                for i in range(user_basis.rank)
            ]
            D, _, _ = smith_normal_form(gmat)
            factors = [D[i][i] for i in range(min(len(gmat), len(names)))]
            if sum(1 for d in factors if abs(d) == 1) != user_basis.rank:
                raise InvalidBasis("user basis images do not generate Z^r")
        return user_basis

    m = len(names)
    k = len(vectors)
    # columns of the m x k matrix are the relator exponent vectors
    M = [[vectors[j][i] for j in range(k)] for i in range(m)]
    D, U, _ = smith_normal_form(M)
    s = min(m, k)
    diag = [D[i][i] for i in range(s)]
    for d in diag:
        if abs(d) > 1:
            raise NontrivialTorsion(
                f"abelianized group has a Z/{abs(d)} factor; only free H_1 is supported"
            )
    free_rows = [i for i in range(m) if i >= s or diag[i] == 0]
    rank = len(free_rows)
    images = {
        name: tuple(U[i][j] for i in free_rows) for j, name in enumerate(names)
    }
    if not presentation.relators:
        basis_names = names
    else:
        basis_names = tuple(f"t{i + 1}" for i in range(rank))
    return AbelianizationMap(rank, images, basis_names)
