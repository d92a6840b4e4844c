import itertools

import pytest
from hypothesis import given, settings, strategies as st

from bernstein_hecke import AffineWall, BoundExceeded, ExtElt, NotATranslationRequired, ParamSys
from bernstein_hecke.errors import ValidationFailed
from bernstein_hecke.affine import ExtendedWeylGroup
from bernstein_hecke.oracle import wall_count_length

from helpers import FIXTURES, algebra, config


def group(name):
    return algebra(name).group


def all_subword_products(G, b):
    """Every product of a subsequence of a reduced word of ``b``, times its Omega part."""
    word, tau = G.gallery_walk(b)
    out = set()
    for mask in itertools.product((0, 1), repeat=len(word)):
        x = G.identity
        for keep, s in zip(mask, word):
            if keep:
                x = G.mul(x, G.gens[s])
        out.add(G.mul(x, tau))
    return out


# ---------------------------------------------------------------- group law

def test_translations_commute_and_add():
    G = group("a2_omega3")
    a, b = G.translation((1, -2)), G.translation((3, 1))
    assert G.mul(a, b) == G.mul(b, a) == G.translation((4, -1))


def test_conjugation_is_the_action():
    G = group("su6_ramified")
    lam = (2, -1, 3)
    for u in range(len(G.W)):
        g = G.finite(u)
        assert G.conj(g, G.translation(lam)) == G.translation(G.act(u, lam))


def test_a1_semidirect_square():
    G = group("a1_weight_lattice")
    x = ExtElt((2,), G.W.simple[0])  # (alpha^vee, s)
    assert G.mul(x, x) == G.identity


@pytest.mark.parametrize("name", FIXTURES)
def test_associativity_and_inverses(name):
    G = group(name)
    ball = G.ball(2)
    for a in ball:
        assert G.mul(a, G.inverse(a)) == G.identity
        for b in ball[:12]:
            for c in ball[:12]:
                assert G.mul(G.mul(a, b), c) == G.mul(a, G.mul(b, c))


# ---------------------------------------------------------------- length

def test_length_examples():
    G = group("a1_weight_lattice")
    assert G.length(G.identity) == 0
    assert G.length(G.translation((2,))) == 2  # alpha^vee
    assert G.length(G.translation((1,))) == 1  # omega
    # independent wall count agrees with the frozen values
    assert wall_count_length(G, G.translation((2,))) == 2
    assert wall_count_length(G, G.translation((1,))) == 1


def test_torsion_has_length_zero():
    G = group("a1_torsion")
    t = G.translation((0, 1))
    assert G.length(t) == 0
    assert G.gallery_walk(t) == ((), t)


@pytest.mark.parametrize("name", FIXTURES)
def test_length_formula_matches_gallery_and_walls(name):
    G = group(name)
    for w in G.ball(6):
        word, tau = G.gallery_walk(w)
        assert G.length(w) == len(word) == wall_count_length(G, w)
        assert G.length(tau) == 0
        assert G.mul(G.from_word(word), tau) == w


def test_gallery_walk_of_generator():
    G = group("a2_omega3")
    for k, g in enumerate(G.gens):
        assert G.gallery_walk(g) == ((k,), G.identity)


def test_gallery_walk_a2_fundamental_translation():
    G = group("a2_omega3")
    t = G.translation((1, 0))
    word, tau = G.gallery_walk(t)
    assert len(word) == 2 and tau != G.identity
    # brute force: the shortest word s_1..s_m with s_1..s_m tau' = t over all alcove stabilizers
    omega, _ = G.omega_elements()
    best = None
    for m in range(0, 4):
        for letters in itertools.product(range(len(G.gens)), repeat=m):
            for t2 in omega:
                if G.mul(G.from_word(letters), t2) == t:
                    best = (m, t2)
                    break
            if best:
                break
        if best:
            break
    assert best == (2, tau)


# ---------------------------------------------------------------- Bruhat order

def test_bruhat_basic():
    G = group("a1_weight_lattice")
    x = G.translation((1,))
    assert G.bruhat_leq(x, x)
    # different length-zero parts never compare
    assert G.omega_part(x) != G.identity
    assert not G.bruhat_leq(G.identity, x)


@pytest.mark.parametrize("name", ["a1_root_lattice", "a1_weight_lattice", "a1_torsion"])
def test_bruhat_a1_chains_match_subwords(name):
    G = group(name)
    ball = G.ball(3)
    for b in ball:
        below = all_subword_products(G, b)
        for a in ball:
            assert G.bruhat_leq(a, b) == (a in below)


@pytest.mark.parametrize("name", ["a2_omega3", "c2_alternating", "su6_ramified"])
def test_bruhat_matches_subwords(name):
    G = group(name)
    ball = G.ball(5 if name != "su6_ramified" else 4)
    for b in ball:
        below = all_subword_products(G, b)
        for a in ball:
            assert G.bruhat_leq(a, b) == (a in below)


def test_bruhat_partial_order():
    G = group("a2_omega3")
    ball = G.ball(3)
    rel = {(a, b): G.bruhat_leq(a, b) for a in ball for b in ball}
    for a in ball:
        assert rel[a, a]
        for b in ball:
            if a != b and rel[a, b]:
                assert not rel[b, a]
            for c in ball:
                if rel[a, b] and rel[b, c]:
                    assert rel[a, c]


# ---------------------------------------------------------------- dominance and orbits

def test_dominance_examples():
    G = group("a1_root_lattice")
    assert G.is_dominant((0,))
    assert not G.is_dominant((-1,))  # -alpha^vee
    assert G.is_dominant((1,))
    T = group("a1_torsion")
    assert T.is_dominant((0, 1))


def test_dominant_decompose_examples():
    G = group("a1_root_lattice")
    assert G.two_rho_vee() == (1,)
    assert G.dominant_decompose((-1,)) == ((0,), (1,))
    assert G.dominant_decompose((3,)) == ((3,), (0,))
    T = group("a1_torsion")
    assert T.dominant_decompose((0, 1)) == ((0, 1), (0, 0))


def test_orbit_examples():
    assert group("a1_root_lattice").weyl_orbit((0,)) == ((0,),)
    assert group("a1_root_lattice").weyl_orbit((1,)) == ((-1,), (1,))
    orb = group("su6_ramified").weyl_orbit((1, 0, 0))
    assert len(orb) == 6
    assert set(orb) == {(1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, -1, 0), (0, 0, 1), (0, 0, -1)}


@pytest.mark.parametrize("name", FIXTURES)
def test_dominance_facts(name):
    G = group(name)
    lat = G.lattice
    trans = G.translations_up_to(6)
    dom = [x for x in trans if G.is_dominant(x)]
    for lam in trans:
        assert any(G.is_dominant(G.act(u, lam)) for u in range(len(G.W)))
        for u in range(len(G.W)):
            assert G.length(G.translation(G.act(u, lam))) == G.length(G.translation(lam))
        a, b = G.small_dominant_decompose(lam)
        assert G.is_dominant(a) and G.is_dominant(b) and lat.sub(a, b) == lam
    for lam in dom:
        for mu in dom:
            assert G.length(G.translation(lat.add(lam, mu))) == (
                G.length(G.translation(lam)) + G.length(G.translation(mu)))
        for u in range(len(G.W)):
            assert G.length(G.mul(G.finite(u), G.translation(lam))) == (
                G.W.lengths[u] + G.length(G.translation(lam)))


def test_translations_window_is_complete():
    # compare against a coordinate box search
    G = group("a2_omega3")
    box = [G.lattice.canon((a, b)) for a in range(-7, 8) for b in range(-7, 8)]
    expected = sorted(x for x in box if G.length(G.translation(x)) <= 6)
    assert sorted(G.translations_up_to(6)) == expected


# ---------------------------------------------------------------- Omega

def test_omega_groups():
    sizes = {"a1_root_lattice": 1, "a1_weight_lattice": 2, "a1_torsion": 4, "a2_omega3": 3,
             "c2_alternating": 1, "su6_ramified": 2, "so_ramified": 2}
    for name, k in sizes.items():
        omega, complete = group(name).omega_elements()
        assert complete and len(omega) == k
        for t in omega:
            assert group(name).length(t) == 0


def test_omega_rotation_a2():
    G = group("a2_omega3")
    (tau, *_) = G.omega_generators()
    perm = G.omega_permutation(tau)
    assert sorted(perm.values()) == sorted(G.labels)
    assert all(perm[a] != a for a in perm)


@pytest.mark.parametrize("name", FIXTURES)
def test_omega_projection_is_multiplicative(name):
    G = group(name)
    ball = G.ball(3)
    for a in ball:
        for b in ball:
            assert G.omega_part(G.mul(a, b)) == G.mul(G.omega_part(a), G.omega_part(b))
        for u in range(len(G.W)):
            assert G.omega_part(G.conj(G.finite(u), a)) == G.omega_part(a)


# ---------------------------------------------------------------- walls and parameters

def test_wall_parameter_of_base_alcove_walls():
    alg = algebra("c2_alternating")
    G = alg.group
    for k, i in enumerate(G.rs.simple_indices):
        assert G.wall_parameter(AffineWall(i, 0), alg.params) == alg.params[G.labels[k]]
    th = G.rs.highest_roots[0]
    assert G.wall_parameter(AffineWall(th, 1), alg.params) == alg.params["s0"]


def test_wall_parameters_su6_equal():
    alg = algebra("su6_ramified")
    G = alg.group
    a = G.rs.root_index(config("su6_ramified").root_labels["2chi_1"])
    assert G.wall_parameter(AffineWall(a, 0), alg.params) == G.wall_parameter(AffineWall(a, 1), alg.params)


def test_wall_parameters_c2_split():
    alg = algebra("c2_alternating")
    G = alg.group
    a = G.rs.root_index((0, 2))
    assert G.wall_parameter(AffineWall(a, 0), alg.params) == 3
    assert G.wall_parameter(AffineWall(a, 1), alg.params) == 1


@pytest.mark.parametrize("name,label,expected", [
    ("su6_ramified", "2chi_1", True), ("so_ramified", "2chi_1", False),
    ("a1_root_lattice", "alpha", False), ("a1_weight_lattice", "alpha", True),
    ("a1_torsion", "alpha", True), ("c2_alternating", "2chi_2", False),
])
def test_transitivity(name, label, expected):
    G = group(name)
    a = G.rs.root_index(config(name).root_labels[label])
    assert G.hyperplane_family_transitive(a) is expected


def test_transitivity_bound():
    G = group("su6_ramified")
    with pytest.raises(BoundExceeded):
        G.hyperplane_family_transitive(G.rs.root_index((1, 0, 0)), bound=2)


@pytest.mark.parametrize("name", FIXTURES)
def test_transitive_families_have_equal_parameters(name):
    alg = algebra(name)
    G = alg.group
    for a in G.rs.positive_indices:
        if G.hyperplane_family_transitive(a):
            assert G.wall_parameter(AffineWall(a, 0), alg.params) == G.wall_parameter(AffineWall(a, 1), alg.params)


def test_validate_params():
    G = group("a2_omega3")
    assert G.validate_params(ParamSys({"s1": 1, "s2": 1, "s0": 1})).ok
    bad = G.validate_params(ParamSys({"s1": 1, "s2": 2, "s0": 1}))
    assert ("odd-edge", "s1", "s2") in bad.violations
    W = group("a1_weight_lattice")
    rep = W.validate_params(ParamSys({"s1": 1, "s0": 2}))
    assert rep.violations == [("omega-orbit", "s1", "s0")]
    R = group("a1_root_lattice")
    assert R.validate_params(ParamSys({"s1": 1, "s0": 2})).ok
    assert group("su6_ramified").validate_params(ParamSys({"s1": 1, "s2": 1, "s3": 2, "s0": 1})).ok
    assert not group("su6_ramified").validate_params(ParamSys({"s1": 1, "s2": 1, "s3": 2, "s0": 3})).ok


def test_coroot_free_part_must_match():
    with pytest.raises(ValidationFailed):
        from bernstein_hecke.roots import build_root_system
        from bernstein_hecke.affine import TranslationGroup
        rs = build_root_system({"simple_roots": [[1]], "simple_coroots": [[2]]})
        ExtendedWeylGroup(rs, TranslationGroup(1, ()), [[1]])


# ---------------------------------------------------------------- conjugation chains

def test_chain_for_simple_reflection():
    G = group("a2_omega3")
    chain = G.find_length_increasing_conjugation(G.gens[0])
    assert len(chain) == 1
    s = G.gens[chain[0]]
    assert G.length(G.mul(G.mul(s, G.gens[0]), s)) == 3


def test_chain_rejects_translations():
    G = group("a2_omega3")
    with pytest.raises(NotATranslationRequired):
        G.find_length_increasing_conjugation(G.translation((1, 1)))


@pytest.mark.parametrize("name", ["a1_root_lattice", "a1_weight_lattice", "a1_torsion", "a2_omega3"])
def test_chains_exist_for_non_translations(name):
    G = group(name)
    for w in G.ball(4):
        if w.u == 0:
            continue
        chain = G.find_length_increasing_conjugation(w, 10)
        y = w
        for s in chain[:-1]:
            g = G.gens[s]
            y = G.mul(G.mul(g, y), g)
            assert G.length(y) == G.length(w)
        g = G.gens[chain[-1]]
        assert G.length(G.mul(G.mul(g, y), g)) > G.length(w)


# ---------------------------------------------------------------- properties

elements = st.tuples(st.sampled_from(FIXTURES), st.lists(st.integers(0, 3), max_size=12),
                     st.integers(0, 3))


def build(example):
    name, word, om = example
    G = group(name)
    omega, _ = G.omega_elements()
    w = G.from_word([s % len(G.gens) for s in word])
    return G, G.mul(w, omega[om % len(omega)])


@settings(max_examples=300, deadline=None)
@given(elements)
def test_random_lengths_agree(example):
    G, w = build(example)
    assert G.length(w) == len(G.gallery_walk(w)[0]) == wall_count_length(G, w)
    assert G.length(w) == G.length(G.inverse(w))


@settings(max_examples=200, deadline=None)
@given(elements, st.lists(st.integers(0, 3), max_size=6))
def test_random_omega_multiplicative(example, word2):
    G, w = build(example)
    x = G.from_word([s % len(G.gens) for s in word2])
    assert G.omega_part(G.mul(w, x)) == G.mul(G.omega_part(w), G.omega_part(x))
    assert G.omega_part(G.mul(G.mul(x, w), G.inverse(x))) == G.omega_part(w)


@settings(max_examples=200, deadline=None)
@given(elements)
def test_random_descents_change_length_by_one(example):
    G, w = build(example)
    for s, g in enumerate(G.gens):
        d = G.length(G.mul(g, w)) - G.length(w)
        assert d == (-1 if G.is_left_descent(s, w) else 1)
        d = G.length(G.mul(w, g)) - G.length(w)
        assert d == (-1 if G.is_right_descent(w, s) else 1)


def test_from_data():
    G = ExtendedWeylGroup.from_data({"simple_roots": [[1]]}, 1, (2,), [[2, 1]])
    assert len(G.W) == 2 and G.lattice.torsion_orders == (2,)
    assert len(G.omega_elements()[0]) == 4
