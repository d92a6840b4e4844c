"""
Finite reduced root systems and their Weyl groups.

Roots are integer functionals on the free part ``Z^n`` of the translation
lattice; coroots (free parts) are integer vectors in ``Z^n``.  The pairing
``<beta, x>`` is the ordinary dot product.

A Weyl group element is stored canonically as the permutation it induces on
the root index set.  Reduced words are recovered by peeling left descents.

>>> rs = build_root_system({"type": "A2", "lattice": "coweight"})
>>> len(rs.roots), len(weyl_enumerate(rs))
(6, 6)
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
import re

__all__ = [
    "RootSystemError", "NonReduced", "NotClosedUnderReflection", "BadCartanPairing",
    "RootSystem", "WeylElt", "WeylGroup",
    "build_root_system", "cartan_matrix_of_type", "reflect", "weyl_enumerate",
    "solve_rational",
]

Vector = tuple[int, ...]


class RootSystemError(ValueError):
    pass


class NonReduced(RootSystemError):
    pass


class NotClosedUnderReflection(RootSystemError):
    pass


class BadCartanPairing(RootSystemError):
    pass


# ---------------------------------------------------------------------------
# small exact linear algebra

def dot(a, b) -> int:
    return sum(x * y for x, y in zip(a, b))


def solve_rational(rows: list[list], rhs: list) -> list[Fraction] | None:
    """Solve ``rows @ x = rhs`` over Q; return one solution or None.

    Free variables are set to zero.  ``rows`` may be non-square.
    """
    m = len(rows)
    n = len(rows[0]) if rows else 0
    aug = [[Fraction(v) for v in row] + [Fraction(b)] for row, b in zip(rows, rhs)]
    pivots = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, m) if aug[i][c] != 0), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        pv = aug[r][c]
        aug[r] = [v / pv for v in aug[r]]
        for i in range(m):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    for i in range(r, m):
        if aug[i][n] != 0:
            return None
    x = [Fraction(0)] * n
    for i, c in enumerate(pivots):
        x[c] = aug[i][n]
    return x


def rank_of(vectors: list[Vector]) -> int:
    if not vectors:
        return 0
    rows = [[Fraction(v) for v in vec] for vec in vectors]
    n = len(rows[0])
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c] / rows[r][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        r += 1
    return r


# ---------------------------------------------------------------------------
# named types

def _epsilon_data(kind: str, k: int) -> tuple[list[Vector], list[Vector]]:
    """Simple roots and coroots for classical types in epsilon coordinates."""
    def e(i, dim):
        v = [0] * dim
        v[i] = 1
        return v

    def diff(i, dim):
        v = [0] * dim
        v[i], v[i + 1] = 1, -1
        return tuple(v)

    if kind == "A":
        dim = k + 1
        simple = [diff(i, dim) for i in range(k)]
        return simple, list(simple)
    dim = k
    simple = [diff(i, dim) for i in range(k - 1)]
    co = list(simple)
    if kind == "B":
        simple.append(tuple(e(k - 1, dim)))
        co.append(tuple(2 * x for x in e(k - 1, dim)))
    elif kind == "C":
        simple.append(tuple(2 * x for x in e(k - 1, dim)))
        co.append(tuple(e(k - 1, dim)))
    elif kind == "D":
        v = [0] * dim
        v[k - 2] = v[k - 1] = 1
        simple.append(tuple(v))
        co.append(tuple(v))
    else:
        raise RootSystemError(f"no epsilon model for type {kind}")
    return simple, co


_EXCEPTIONAL = {
    # entry [i][j] = <alpha_i, alpha_j^vee>, Bourbaki numbering
    ("G", 2): [[2, -1], [-3, 2]],
    ("F", 4): [[2, -1, 0, 0], [-1, 2, -2, 0], [0, -1, 2, -1], [0, 0, -1, 2]],
}


def _parse_type(name: str) -> list[tuple[str, int]]:
    parts = [p for p in re.split(r"\s*[xX×]\s*", name.strip()) if p]
    out = []
    for p in parts:
        m = re.fullmatch(r"([ABCDFG])_?(\d+)", p)
        if not m:
            raise RootSystemError(f"unrecognized root system type {p!r}")
        kind, k = m.group(1), int(m.group(2))
        ok = {
            "A": k >= 1, "B": k >= 2, "C": k >= 2, "D": k >= 4,
            "G": k == 2, "F": k == 4,
        }[kind]
        if not ok:
            raise RootSystemError(f"unsupported rank for type {p!r}")
        out.append((kind, k))
    if not out:
        raise RootSystemError("empty type name")
    return out


def cartan_matrix_of_type(name: str) -> list[list[int]]:
    """Block-diagonal Cartan matrix, entry ``[i][j] = <alpha_i, alpha_j^vee>``."""
    blocks = []
    for kind, k in _parse_type(name):
        if (kind, k) in _EXCEPTIONAL:
            blocks.append(_EXCEPTIONAL[(kind, k)])
        else:
            simple, co = _epsilon_data(kind, k)
            blocks.append([[dot(a, c) for c in co] for a in simple])
    r = sum(len(b) for b in blocks)
    mat = [[0] * r for _ in range(r)]
    off = 0
    for b in blocks:
        for i, row in enumerate(b):
            for j, x in enumerate(row):
                mat[off + i][off + j] = x
        off += len(b)
    return mat


def _named_coordinates(name: str, lattice: str) -> tuple[list[Vector], list[Vector]]:
    if lattice == "standard":
        simple: list[Vector] = []
        co: list[Vector] = []
        blocks = []
        for kind, k in _parse_type(name):
            if (kind, k) in _EXCEPTIONAL:
                raise RootSystemError(
                    f"type {kind}{k} has no standard integral model; use 'coweight' or 'coroot'")
            blocks.append(_epsilon_data(kind, k))
        dim = sum(len(b[0][0]) for b in blocks)
        off = 0
        for s_list, c_list in blocks:
            d = len(s_list[0])
            for v in s_list:
                simple.append(tuple([0] * off + list(v) + [0] * (dim - off - d)))
            for v in c_list:
                co.append(tuple([0] * off + list(v) + [0] * (dim - off - d)))
            off += d
        return simple, co
    cm = cartan_matrix_of_type(name)
    r = len(cm)
    if lattice == "coweight":
        simple = [tuple(1 if j == i else 0 for j in range(r)) for i in range(r)]
        co = [tuple(cm[k][j] for k in range(r)) for j in range(r)]
    elif lattice == "coroot":
        simple = [tuple(cm[i]) for i in range(r)]
        co = [tuple(1 if k == j else 0 for k in range(r)) for j in range(r)]
    else:
        raise RootSystemError(f"unknown lattice preset {lattice!r}")
    return simple, co


# ---------------------------------------------------------------------------
# the root system

@dataclass(frozen=True)
class RootSystem:
    """A finite reduced root system realized as functionals on ``Z^n``."""

    ambient_rank: int
    roots: tuple[Vector, ...]
    coroots: tuple[Vector, ...]          # free parts, parallel to ``roots``
    simple_indices: tuple[int, ...]
    positive: tuple[bool, ...]
    simple_coefficients: tuple[tuple[int, ...], ...]  # root in simple-root basis
    components: tuple[tuple[int, ...], ...]           # simple positions per component
    root_component: tuple[int, ...]
    highest_roots: tuple[int, ...]
    cartan: tuple[tuple[int, ...], ...]
    index: dict = field(compare=False, repr=False, default_factory=dict)

    @property
    def rank(self) -> int:
        return len(self.simple_indices)

    @property
    def simple_roots(self) -> list[Vector]:
        return [self.roots[i] for i in self.simple_indices]

    @property
    def simple_coroots(self) -> list[Vector]:
        return [self.coroots[i] for i in self.simple_indices]

    @property
    def positive_indices(self) -> list[int]:
        return [i for i, p in enumerate(self.positive) if p]

    def root_index(self, root) -> int:
        return self.index[tuple(root)]

    def negative_of(self, i: int) -> int:
        return self.index[tuple(-x for x in self.roots[i])]

    def height(self, i: int) -> int:
        return sum(self.simple_coefficients[i])

    def pairing(self, i: int, x) -> int:
        return dot(self.roots[i], x)

    def reflect_root(self, j: int, i: int) -> int:
        """Index of ``s_{root i}(root j)``."""
        a, b = self.roots[j], self.roots[i]
        c = dot(a, self.coroots[i])
        return self.index[tuple(x - c * y for x, y in zip(a, b))]

    def coxeter_number(self, component: int) -> int:
        return self.height(self.highest_roots[component]) + 1

    def describe_type(self) -> str:
        """Cartan type name of each component, e.g. ``"B3"`` or ``"A1xA1"``."""
        return "x".join(self._component_type(c) for c in range(len(self.components))) or "empty"

    def _component_type(self, c: int) -> str:
        idx = [i for i in range(len(self.roots)) if self.root_component[i] == c]
        r = len(self.components[c])
        # relative squared lengths from |b|^2/|a|^2 = <b, a^vee> / <a, b^vee>
        norm = {idx[0]: Fraction(1)}
        stack = [idx[0]]
        while stack:
            a = stack.pop()
            for b in idx:
                if b in norm:
                    continue
                ab = dot(self.roots[a], self.coroots[b])
                if ab:
                    norm[b] = norm[a] * Fraction(dot(self.roots[b], self.coroots[a]), ab)
                    stack.append(b)
        smallest = min(norm.values())
        n_short = sum(1 for v in norm.values() if v == smallest)
        total = len(idx)
        if n_short == total:
            if total == r * (r + 1):
                return f"A{r}"
            if r >= 4 and total == 2 * r * (r - 1):
                return f"D{r}"
            return f"simply-laced rank {r}"
        if r == 2 and total == 12:
            return "G2"
        if r == 4 and total == 48 and n_short == 24:
            return "F4"
        if total == 2 * r * r:
            if n_short == 2 * r:
                return f"B{r}"
            if n_short == 2 * r * (r - 1):
                return f"C{r}"
        return f"rank {r}"


def _normalize(vec) -> tuple:
    return tuple(int(x) if Fraction(x).denominator == 1 else Fraction(x) for x in vec)


def _generate_roots(simple: list[Vector], co: list[Vector]):
    """Close the simple roots under simple reflections, tracking coroots."""
    roots: list[Vector] = list(simple)
    coroots: list[Vector] = list(co)
    index = {r: i for i, r in enumerate(roots)}
    queue = list(range(len(roots)))
    cap = 10000
    while queue:
        j = queue.pop()
        for a, ac in zip(simple, co):
            beta, bco = roots[j], coroots[j]
            c = dot(beta, ac)
            if Fraction(c).denominator != 1:
                raise BadCartanPairing(f"<{beta}, {ac}> = {c} is not an integer")
            c = int(c)
            img = tuple(x - c * y for x, y in zip(beta, a))
            # coroot transforms by the contragredient reflection
            d = dot(a, bco)
            img_co = _normalize(x - d * y for x, y in zip(bco, ac))
            if img not in index:
                index[img] = len(roots)
                roots.append(img)
                coroots.append(img_co)
                queue.append(index[img])
                if len(roots) > cap:
                    raise BadCartanPairing("root closure does not terminate; not a finite root system")
            elif coroots[index[img]] != img_co:
                raise BadCartanPairing(
                    f"coroot of {img} is ambiguous: {coroots[index[img]]} vs {img_co}")
    return roots, coroots, index


def build_root_system(data: dict) -> RootSystem:
    """Build and validate a root system.

    ``data`` is either a named type (``{"type": "B3", "lattice": "coweight"}``),
    explicit simple data (``simple_roots`` + ``simple_coroots``, optional
    ``type`` to check against) or an explicit full list (``roots`` +
    ``coroots``).
    """
    simple: list[Vector] | None = None
    co: list[Vector] | None = None
    listed: list[Vector] | None = None
    listed_co: list[Vector] | None = None

    if "roots" in data:
        listed = [tuple(int(x) for x in r) for r in data["roots"]]
        if "coroots" in data:
            listed_co = [tuple(int(x) for x in r) for r in data["coroots"]]
        else:
            # coordinates taken as orthonormal: alpha^vee = 2 alpha / (alpha, alpha)
            listed_co = [_normalize(tuple(Fraction(2 * x, dot(r, r)) for x in r)) for r in listed]
        if len(listed_co) != len(listed):
            raise BadCartanPairing("'roots' and 'coroots' differ in length")
        if len(set(listed)) != len(listed):
            raise RootSystemError("duplicate roots in explicit list")
        lset = set(listed)
        for r in listed:
            if tuple(2 * x for x in r) in lset:
                raise NonReduced(f"both {r} and its double are roots")
            if tuple(-x for x in r) not in lset:
                raise NotClosedUnderReflection(f"{r} is listed but its negative is not")
        for r, c in zip(listed, listed_co):
            if dot(r, c) != 2:
                raise BadCartanPairing(f"<{r}, {c}> = {dot(r, c)} != 2")
        if "simple_roots" in data:
            simple = [tuple(int(x) for x in r) for r in data["simple_roots"]]
        else:
            simple = _base_from_roots(listed)
        lidx = {r: i for i, r in enumerate(listed)}
        missing = [r for r in simple if r not in lidx]
        if missing:
            raise RootSystemError(f"simple roots {missing} are not in the root list")
        co = [listed_co[lidx[r]] for r in simple]
    elif "simple_roots" in data:
        simple = [tuple(int(x) for x in r) for r in data["simple_roots"]]
        if "simple_coroots" not in data:
            raise BadCartanPairing("'simple_roots' requires 'simple_coroots'")
        co = [tuple(int(x) for x in r) for r in data["simple_coroots"]]
    elif "type" in data:
        simple, co = _named_coordinates(data["type"], data.get("lattice", "coweight"))
    else:
        raise RootSystemError("root system description needs 'type', 'simple_roots' or 'roots'")

    if len(simple) != len(co):
        raise BadCartanPairing("simple roots and coroots differ in number")
    n = len(simple[0]) if simple else int(data.get("ambient_rank", 0))
    if any(len(v) != n for v in list(simple) + list(co)):
        raise BadCartanPairing("inconsistent vector dimensions")
    co = [_normalize(c) for c in co]

    r = len(simple)
    cartan = [[dot(simple[i], co[j]) for j in range(r)] for i in range(r)]
    if any(Fraction(x).denominator != 1 for row in cartan for x in row):
        raise BadCartanPairing(f"non-integral Cartan pairing {cartan}")
    cartan = [[int(x) for x in row] for row in cartan]
    for i in range(r):
        if cartan[i][i] != 2:
            raise BadCartanPairing(f"<alpha_{i+1}, alpha_{i+1}^vee> = {cartan[i][i]} != 2")
        for j in range(r):
            if i == j:
                continue
            if cartan[i][j] > 0:
                raise BadCartanPairing(f"positive off-diagonal Cartan entry at ({i+1},{j+1})")
            if (cartan[i][j] == 0) != (cartan[j][i] == 0):
                raise BadCartanPairing(f"asymmetric zero pattern at ({i+1},{j+1})")
            if cartan[i][j] * cartan[j][i] > 3:
                raise BadCartanPairing(f"non-finite Coxeter label at ({i+1},{j+1})")
    if rank_of(simple) != r:
        raise BadCartanPairing("simple roots are linearly dependent")
    if "type" in data and ("simple_roots" in data or "roots" in data):
        expected = cartan_matrix_of_type(data["type"])
        if expected != cartan:
            raise BadCartanPairing(
                f"Cartan matrix {cartan} does not match declared type {data['type']}")

    roots, coroots, index = _generate_roots(simple, co)
    rset = set(roots)
    for rt in roots:
        if tuple(2 * x for x in rt) in rset:
            raise NonReduced(f"both {rt} and its double are roots")
    if listed is not None:
        if set(listed) != rset:
            extra = sorted(set(listed) - rset)
            lacking = sorted(rset - set(listed))
            raise NotClosedUnderReflection(
                f"listed roots are not a single reflection-closed system "
                f"(unreachable: {extra}, missing: {lacking})")
        lco = dict(zip(listed, listed_co))
        for rt, c in zip(roots, coroots):
            if lco[rt] != c:
                raise BadCartanPairing(f"listed coroot of {rt} is {lco[rt]}, reflections give {c}")

    # canonical order: positive roots by height then lexicographic, then negatives
    coeffs = {}
    for rt in roots:
        sol = solve_rational([list(col) for col in zip(*simple)], list(rt))
        if sol is None or any(x.denominator != 1 for x in sol):
            raise BadCartanPairing(f"root {rt} is not an integral combination of simple roots")
        coeffs[rt] = tuple(int(x) for x in sol)
    for rt, c in coeffs.items():
        if not (all(x >= 0 for x in c) or all(x <= 0 for x in c)):
            raise BadCartanPairing(f"root {rt} has mixed-sign simple coefficients {c}")
    co_of = dict(zip(roots, coroots))
    pos = sorted((rt for rt in roots if sum(coeffs[rt]) > 0),
                 key=lambda rt: (sum(coeffs[rt]), [-x for x in coeffs[rt]]))
    order = pos + [tuple(-x for x in rt) for rt in pos]
    idx = {rt: i for i, rt in enumerate(order)}
    simple_indices = tuple(idx[s] for s in simple)

    # components: connectivity of the Cartan graph
    parent = list(range(r))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for i in range(r):
        for j in range(r):
            if i != j and cartan[i][j]:
                parent[find(i)] = find(j)
    groups: dict[int, list[int]] = {}
    for i in range(r):
        groups.setdefault(find(i), []).append(i)
    components = tuple(tuple(g) for g in sorted(groups.values()))
    comp_of_simple = {i: c for c, g in enumerate(components) for i in g}
    root_component = []
    for rt in order:
        support = [k for k, x in enumerate(coeffs[rt]) if x]
        root_component.append(comp_of_simple[support[0]])
    highest = []
    for c, g in enumerate(components):
        best = max((i for i, rt in enumerate(order) if root_component[i] == c and sum(coeffs[rt]) > 0),
                   key=lambda i: sum(coeffs[order[i]]))
        highest.append(best)
        for i, rt in enumerate(order):
            if root_component[i] == c:
                diff = [a - b for a, b in zip(coeffs[order[best]], coeffs[rt])]
                if any(x < 0 for x in diff):
                    raise BadCartanPairing(f"highest root of component {c} does not dominate {rt}")
    return RootSystem(
        ambient_rank=n,
        roots=tuple(order),
        coroots=tuple(co_of[rt] for rt in order),
        simple_indices=simple_indices,
        positive=tuple(i < len(pos) for i in range(len(order))),
        simple_coefficients=tuple(coeffs[rt] for rt in order),
        components=components,
        root_component=tuple(root_component),
        highest_roots=tuple(highest),
        cartan=tuple(tuple(row) for row in cartan),
        index=idx,
    )


def _base_from_roots(roots: list[Vector]) -> list[Vector]:
    """Simple roots for the positive system cut out by a generic functional."""
    n = len(roots[0])
    for scale in (1009, 7919, 104729):
        f = [scale ** (n - k) + k for k in range(n)]
        vals = [dot(r, f) for r in roots]
        if all(v != 0 for v in vals):
            break
    else:
        raise RootSystemError("could not find a regular functional")
    pos = [r for r, v in zip(roots, vals) if v > 0]
    pset = set(pos)
    decomposable = set()
    for a, b in combinations(pos, 2):
        s = tuple(x + y for x, y in zip(a, b))
        if s in pset:
            decomposable.add(s)
    for a in pos:
        s = tuple(2 * x for x in a)
        if s in pset:
            decomposable.add(s)
    return sorted((r for r in pos if r not in decomposable), key=lambda r: [-x for x in r])


# ---------------------------------------------------------------------------
# Weyl group

@dataclass(frozen=True)
class WeylElt:
    """A Weyl group element as a permutation of root indices."""

    perm: tuple[int, ...]

    def __call__(self, root_index: int) -> int:
        return self.perm[root_index]


class WeylGroup:
    """The finite Weyl group of a root system, fully enumerated.

    Elements are addressed by integer index (sorted by length, then by the
    lexicographically first reduced word).  Index 0 is the identity.
    """

    def __init__(self, rs: RootSystem):
        self.rs = rs
        nroots = len(rs.roots)
        self.simple_perms = []
        for i in rs.simple_indices:
            self.simple_perms.append(tuple(rs.reflect_root(j, i) for j in range(nroots)))
        ident = tuple(range(nroots))
        seen = {ident}
        frontier = [ident]
        while frontier:
            nxt = []
            for w in frontier:
                for sp in self.simple_perms:
                    sw = tuple(sp[k] for k in w)
                    if sw not in seen:
                        seen.add(sw)
                        nxt.append(sw)
            frontier = nxt
        words = {p: self._reduced_word(p) for p in seen}
        self.elements: list[tuple[int, ...]] = sorted(seen, key=lambda p: (len(words[p]), words[p]))
        self.index = {p: k for k, p in enumerate(self.elements)}
        self.words = [words[p] for p in self.elements]
        self.lengths = [len(w) for w in self.words]
        self.inverse = []
        for p in self.elements:
            inv = [0] * nroots
            for a, b in enumerate(p):
                inv[b] = a
            self.inverse.append(self.index[tuple(inv)])
        self.simple = [self.index[sp] for sp in self.simple_perms]
        self._mul: dict[tuple[int, int], int] = {}
        # u^{-1}(alpha) < 0 for each positive root alpha, per element u
        pos = rs.positive_indices
        self.inverse_negates = []
        for k in range(len(self.elements)):
            inv = self.elements[self.inverse[k]]
            self.inverse_negates.append(tuple(not rs.positive[inv[a]] for a in pos))
        # linear action on the free part V = Z^n (coroot side)
        n = rs.ambient_rank
        self.simple_matrices = []
        for a, c in zip(rs.simple_roots, rs.simple_coroots):
            self.simple_matrices.append(tuple(
                tuple((1 if i == j else 0) - c[i] * a[j] for j in range(n)) for i in range(n)))
        self.matrices = []
        ident_m = tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))
        for word in self.words:
            m = ident_m
            for s in reversed(word):
                m = _matmul(self.simple_matrices[s], m)
            self.matrices.append(m)

    def _reduced_word(self, p: tuple[int, ...]) -> tuple[int, ...]:
        rs = self.rs
        word = []
        cur = p
        while True:
            inv = [0] * len(cur)
            for a, b in enumerate(cur):
                inv[b] = a
            for k, si in enumerate(rs.simple_indices):
                if not rs.positive[inv[si]]:
                    word.append(k)
                    sp = self.simple_perms[k]
                    cur = tuple(sp[x] for x in cur)
                    break
            else:
                return tuple(word)

    def __len__(self) -> int:
        return len(self.elements)

    def mul(self, a: int, b: int) -> int:
        key = (a, b)
        r = self._mul.get(key)
        if r is None:
            pa, pb = self.elements[a], self.elements[b]
            r = self.index[tuple(pa[k] for k in pb)]
            self._mul[key] = r
        return r

    def act_root(self, w: int, root_index: int) -> int:
        return self.elements[w][root_index]

    def act_free(self, w: int, x) -> tuple:
        m = self.matrices[w]
        return tuple(sum(row[j] * x[j] for j in range(len(x))) for row in m)

    def from_word(self, word) -> int:
        w = 0
        for s in word:
            w = self.mul(w, self.simple[s])
        return w

    def reflection(self, root_index: int) -> int:
        rs = self.rs
        return self.index[tuple(rs.reflect_root(j, root_index) for j in range(len(rs.roots)))]

    def element(self, w: int) -> WeylElt:
        return WeylElt(self.elements[w])

    def longest(self) -> int:
        return max(range(len(self.elements)), key=lambda k: self.lengths[k])


def _matmul(a, b):
    n = len(a)
    m = len(b[0]) if b else 0
    return tuple(tuple(sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(m)) for i in range(n))


def reflect(group: WeylGroup, w: int, root_index: int) -> int:
    """``s_alpha * w`` for the root with the given index."""
    return group.mul(group.reflection(root_index), w)


def weyl_enumerate(rs: RootSystem) -> list[WeylElt]:
    return [WeylElt(p) for p in WeylGroup(rs).elements]
