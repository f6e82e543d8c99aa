"""Acceptance suite: one test per criterion, each reporting a PASS/FAIL line.

Run ``pytest tests/test_acceptance.py -v`` and read the summary block at
the end, or add ``-s`` to see the lines as they happen.
"""

import random
from contextlib import contextmanager
from fractions import Fraction
from itertools import product
from math import prod

import pytest

from cantorkit.abgroup import (
    are_isomorphic,
    classify,
    matmul,
    quotient_enumerate,
    smith_normal_form,
)
from cantorkit.cardinal import (
    Aleph,
    Beth,
    CardCmp,
    Finite,
    Mode,
    card_add,
    card_cmp,
    card_mul,
    card_pow2,
    normalize,
)
from cantorkit.errors import NoSection, NotDomain, Unrepresentable
from cantorkit.modlin import (
    SES,
    LinearMap,
    VectorList,
    extend_to_basis,
    is_independent,
    is_projective_zmodule,
    rank_nullity,
    same_lattice,
    sieve_basis,
    split_section,
    stacked_basis,
)
from cantorkit.ordinal import OMEGA, ONE, Cmp, Ordinal, ord_add, ord_cmp, ord_mul, render
from cantorkit.parsing import parse_cardinal, parse_ordinal
from cantorkit.ringpoly import (
    GF,
    NEG_INFINITY,
    Q,
    Z,
    IdealFx,
    IdealZ,
    ModN,
    Polynomial,
    acc_stabilize,
    finite_domain_to_field,
    ideal_member,
    ideal_principal_generator,
    maximal_ideals_modn,
    poly_deg,
)
from cantorkit.setcore import (
    CountableInjectionPair,
    FiniteMap,
    FiniteSet,
    check_function_kind,
    has_bijection_to_powerset,
    powerset,
    sb_in_E,
    sb_point_countable,
    schroeder_bernstein_finite,
)

from cli_goldens import GOLDENS
from oracles import (
    bounded_combination,
    brute_force_cosets,
    coded_concat,
    coded_copies,
    coded_from_small,
    coded_signature,
    det_bruteforce,
    determinantal_divisors,
    element_order_bruteforce,
    random_matrix,
    random_ordinal,
    random_unimodular,
    signature_compare,
    signature_to_ordinal,
)
from test_cli import random_cardinal, run, schema_key
from test_modlin import identity, mmul, oracle_rank, random_field_ses, random_vectors
from test_setcore import forward_E

W = OMEGA


@pytest.fixture
def criterion(request):
    lines = request.config.__dict__.setdefault("_acceptance_lines", [])

    @contextmanager
    def report(number, title):
        try:
            yield
        except BaseException:
            line = f"FAIL criterion {number:>2}: {title}"
            lines.append(line)
            print(line)
            raise
        line = f"PASS criterion {number:>2}: {title}"
        lines.append(line)
        print(line)

    return report


def test_criterion_01_ordinal_laws(criterion):
    with criterion(1, "ordinal examples, 100-step chain, coded-order oracle below w*4+16"):
        assert ord_add(ONE, W) == W
        assert ord_add(W, ONE) != W
        prev = W
        for n in range(1, 101):
            nxt = ord_add(W, Ordinal.of(n))
            assert ord_cmp(prev, nxt) is Cmp.LESS
            prev = nxt
        pool = [(k, n) for k in range(5) for n in range(16)]
        values = {kn: ord_add(ord_mul(W, Ordinal.of(kn[0])), Ordinal.of(kn[1])) for kn in pool}
        coded = {kn: coded_from_small(*kn) for kn in pool}
        sigs = {kn: coded_signature(coded[kn]) for kn in pool}
        checked = 0
        for p in pool:
            for q in pool:
                a, b = values[p], values[q]
                assert ord_add(a, b) == signature_to_ordinal(coded_signature(coded_concat(coded[p], coded[q])))
                assert ord_mul(a, b) == signature_to_ordinal(coded_signature(coded_copies(coded[p], coded[q])))
                assert int(ord_cmp(a, b)) == signature_compare(sigs[p], sigs[q])
                checked += 1
        assert checked == 80 * 80


def test_criterion_02_ordinal_algebra(criterion):
    with criterion(2, "associativity and left distributivity on 10^4 depth-3 triples"):
        rng = random.Random(202)
        for _ in range(10 ** 4):
            a, b, c = (random_ordinal(rng, depth=3, max_terms=2, max_coeff=5) for _ in range(3))
            assert ord_add(ord_add(a, b), c) == ord_add(a, ord_add(b, c))
            assert ord_mul(ord_mul(a, b), c) == ord_mul(a, ord_mul(b, c))
            assert ord_mul(a, ord_add(b, c)) == ord_add(ord_mul(a, b), ord_mul(a, c))
        two = ord_add(ONE, ONE)
        assert ord_mul(two, W) == W
        assert ord_mul(W, Ordinal.of(2)) == ord_add(ord_mul(ONE, W), ord_mul(ONE, W))
        assert ord_mul(two, W) != ord_add(ord_mul(ONE, W), ord_mul(ONE, W))


def _max_when_provable(a, b, mode):
    c = card_cmp(a, b, mode)
    if c is CardCmp.UNDETERMINED:
        return None
    return b if c is CardCmp.LESS else a


def test_criterion_03_cardinal_absorption(criterion):
    with criterion(3, "cardinal absorption, Cantor, CH and GCH behaviour"):
        rng = random.Random(303)
        seen = 0
        for _ in range(3000):
            mode = rng.choice(list(Mode))
            a = rng.choice([Finite(rng.randint(1, 100)), Aleph(rng.randint(0, 6)), Beth(rng.randint(0, 6))])
            b = rng.choice([Aleph(rng.randint(0, 6)), Beth(rng.randint(0, 6))])
            if rng.random() < 0.5:
                a, b = b, a
            top = _max_when_provable(a, b, mode)
            if top is None:
                continue
            seen += 1
            assert card_cmp(card_add(a, b, mode), top, mode) is CardCmp.EQUAL
            assert card_cmp(card_mul(a, b, mode), top, mode) is CardCmp.EQUAL
        assert seen > 1000
        for mode in Mode:
            for k in [Finite(n) for n in range(20)] + [Aleph(k) for k in range(6)] + [Beth(k) for k in range(6)]:
                try:
                    p = card_pow2(k, mode)
                except Unrepresentable:
                    continue
                assert card_cmp(p, k, mode) is CardCmp.GREATER
        assert card_pow2(Aleph(0), Mode.CH) == Aleph(1)
        assert card_cmp(Beth(1), Aleph(1), Mode.BASE) is CardCmp.UNDETERMINED
        family = [Finite(n) for n in range(5)] + [Aleph(k) for k in range(8)] + [Beth(k) for k in range(8)]
        for x, y in product(family, repeat=2):
            assert card_cmp(x, y, Mode.GCH) is not CardCmp.UNDETERMINED


def _sb_rule(f, g, A):
    """h = f on E and g^-1 off E, with E grown from A minus g(B)."""
    g_inv = {v: k for k, v in g.items()}
    layer = {a for a in A if a not in g_inv}
    E = set(layer)
    while layer:
        layer = {g[f[a]] for a in layer} - E
        E |= layer
    return {a: f[a] if a in E else g_inv[a] for a in A}


def test_criterion_04_schroeder_bernstein(criterion):
    with criterion(4, "finite construction on 10^3 pairs, countable harness f = g = 2n"):
        rng = random.Random(404)
        for _ in range(1000):
            n = rng.randint(0, 9)
            A = list(range(n))
            B = [f"b{i}" for i in range(n)]
            fi, gi = B[:], A[:]
            rng.shuffle(fi)
            rng.shuffle(gi)
            f = dict(zip(A, fi))
            g = dict(zip(B, gi))
            h = schroeder_bernstein_finite(FiniteSet(A), FiniteSet(B),
                                           FiniteMap(FiniteSet(A), FiniteSet(B), f.items()),
                                           FiniteMap(FiniteSet(B), FiniteSet(A), g.items()))
            kind = check_function_kind(h)
            assert kind["bijective"]
            assert h.as_dict() == _sb_rule(f, g, A)
        pair = CountableInjectionPair(lambda n: 2 * n, lambda n: 2 * n, fuel=1024)
        assert sb_point_countable(pair, 3) == 6
        assert sb_point_countable(pair, 2) == 1
        assert sb_point_countable(pair, 0) == 0
        values = [sb_point_countable(pair, x) for x in range(513)]
        assert len(set(values)) == 513
        E = forward_E(pair.f, pair.g, 512, 4096)
        assert {x for x in range(513) if sb_in_E(pair, x)} == E


def test_criterion_05_powerset(criterion):
    with criterion(5, "|P(A)| = 2^|A| up to 12, no bijection A -> P(A) up to 3"):
        for n in range(13):
            subsets = powerset(FiniteSet(range(n)))
            assert len(subsets) == 2 ** n
            assert len(set(subsets)) == 2 ** n
        for n in range(4):
            assert not has_bijection_to_powerset(FiniteSet(range(n)))


def _check_smith(A):
    s = smith_normal_form(A)
    assert matmul(matmul(s.U, A), s.V) == s.D
    assert abs(det_bruteforce(s.U)) == 1 and abs(det_bruteforce(s.V)) == 1
    for i, row in enumerate(s.D):
        for j, x in enumerate(row):
            assert i == j or x == 0
    nz = [d for d in s.diag if d]
    assert list(s.diag[:len(nz)]) == nz and all(d > 0 for d in nz)
    assert all(b % a == 0 for a, b in zip(nz, nz[1:]))
    for i, delta in enumerate(determinantal_divisors(A), 1):
        assert prod(s.diag[:i]) == delta


def test_criterion_06_smith_normal_form(criterion):
    with criterion(6, "SNF on 10^3 matrices, determinantal divisors, Z/2 + Z/4, Z/6"):
        rng = random.Random(606)
        for _ in range(1000):
            _check_smith(random_matrix(rng, rng.randint(1, 4), rng.randint(1, 4)))
        A = [[2, 4], [6, 8]]
        c = classify(A)
        assert c.torsion == (2, 4) and c.free_rank == 0
        cosets = brute_force_cosets(A)
        assert len(cosets) == len(quotient_enumerate(A)) == 8
        assert max(element_order_bruteforce(A, list(r), 8) for r in cosets) == 4
        assert are_isomorphic([[6]], [[2, 0], [0, 3]])


def test_criterion_07_presentation_invariance(criterion):
    with criterion(7, "classification fixed under 10^3 unimodular transforms per seed"):
        seeds = [[[2, 4], [6, 8]], [[2, 0], [0, 3]], [[0, 3]], [[4, 0, 0], [0, 6, 0], [0, 0, 0]],
                 [[1, 2, 3], [4, 5, 6], [7, 8, 9]], [[3, -1, 2, 0], [6, 2, 0, 4], [0, 0, 5, 5]]]
        rng = random.Random(707)
        for A in seeds:
            want = classify(A)
            for _ in range(1000):
                U = random_unimodular(rng, len(A), 6)
                V = random_unimodular(rng, len(A[0]), 6)
                assert classify(matmul(matmul(U, A), V)) == want


def _random_poly(rng, R):
    if R == Q:
        cs = [Fraction(rng.randint(-9, 9), rng.randint(1, 6)) for _ in range(rng.randint(0, 7))]
    elif R == Z:
        cs = [rng.randint(-20, 20) for _ in range(rng.randint(0, 7))]
    else:
        cs = [rng.randrange(R.modulus) for _ in range(rng.randint(0, 7))]
    return Polynomial(R, cs)


def test_criterion_08_ring_and_polynomial_laws(criterion):
    with criterion(8, "ring identities and convolution laws over Z/6, Z, Q, GF(5)"):
        rng = random.Random(808)
        for R in (ModN(6), Z, Q, GF(5)):
            zero = Polynomial(R, [])
            for _ in range(300):
                f, g, h = (_random_poly(rng, R) for _ in range(3))
                assert zero * f == f * zero == zero
                assert (-f) * g == -(f * g) == f * (-g)
                assert (-f) * (-g) == f * g
                assert (f * g) * h == f * (g * h)
                assert f * g == g * f
                assert f * (g + h) == f * g + f * h
                assert (f + g) * h == f * h + g * h
                # deg fg <= deg f + deg g, with equality over a domain
                d, s = poly_deg(f * g), poly_deg(f) + poly_deg(g)
                assert d == s if R != ModN(6) else (d < s or d == s)
        assert poly_deg(Polynomial(Z, [])) == NEG_INFINITY
        f, g = Polynomial(ModN(6), [0, 2]), Polynomial(ModN(6), [0, 3])
        assert (f * g).is_zero() and poly_deg(f * g) < poly_deg(f) + poly_deg(g)


def test_criterion_09_finite_domain_to_field(criterion):
    with criterion(9, "inverse tables for small primes, NotDomain witnesses"):
        for p in (2, 3, 5, 7, 11, 13):
            table = finite_domain_to_field(p)
            assert sorted(table) == list(range(1, p))
            assert all(a * b % p == 1 for a, b in table.items())
        for n in (4, 6, 8, 9, 10, 12):
            with pytest.raises(NotDomain) as info:
                finite_domain_to_field(n)
            a, b = info.value.witness
            assert 0 < a < n and 0 < b < n and a * b % n == 0


def _prime_divisors(n):
    return [p for p in range(2, n + 1) if n % p == 0 and all(p % q for q in range(2, p))]


def test_criterion_10_pid_ideals(criterion):
    with criterion(10, "(4,6) = (2), membership vs search in Z and Q[x], acc, maximal ideals"):
        assert ideal_principal_generator(IdealZ([4, 6])) == 2
        rng = random.Random(1010)
        for _ in range(200):
            gens = [rng.randint(-12, 12) for _ in range(rng.randint(1, 2))]
            # with |g| <= 12 and |a| <= 40 a combination with |r_i| <= 50 exists
            reach = {sum(r * g for r, g in zip(rs, gens)) for rs in product(range(-50, 51), repeat=len(gens))}
            I = IdealZ(gens)
            for a in range(-40, 41):
                assert ideal_member(a, I) == (a in reach)
        for _ in range(200):
            gens = [Polynomial(Q, [rng.randint(-3, 3) for _ in range(rng.randint(1, 3))])
                    for _ in range(rng.randint(1, 2))]
            I = IdealFx(Q, gens)
            for _ in range(3):
                if rng.random() < 0.5:
                    a = gens[0] * Polynomial(Q, [rng.randint(-3, 3) for _ in range(2)])
                else:
                    a = Polynomial(Q, [rng.randint(-3, 3) for _ in range(rng.randint(0, 4))])
                assert ideal_member(a, I) == bounded_combination(a, gens)
        assert acc_stabilize([IdealZ([8]), IdealZ([4]), IdealZ([2]), IdealZ([2])]) == 2
        assert maximal_ideals_modn(12) == [2, 3]
        for n in range(2, 501):
            found = maximal_ideals_modn(n)
            assert found and found == _prime_divisors(n)


FIELDS = [Q, GF(2), GF(5), GF(7)]


def test_criterion_11_linear_algebra(criterion):
    with criterion(11, "rank-nullity on 500 maps per field, sieve, extend, basis size"):
        rng = random.Random(1111)
        for F in FIELDS:
            for _ in range(500):
                k, n = rng.randint(1, 8), rng.randint(1, 8)
                T = LinearMap(F, random_vectors(rng, F, k, n))
                ker, im = rank_nullity(T)
                assert len(ker) + len(im) == n
                assert len(im) == oracle_rank(F, [list(r) for r in T.matrix], n)
                assert all(all(x == 0 for x in T(v)) for v in ker)
            for _ in range(100):
                n = rng.randint(1, 8)
                vs = random_vectors(rng, F, rng.randint(0, 8), n)
                r = oracle_rank(F, vs, n)
                s = sieve_basis(VectorList(F, n, vs))
                assert is_independent(s) and len(s) == r
                assert oracle_rank(F, vs + [list(x) for x in s.vectors], n) == r
                e = extend_to_basis(s)
                assert is_independent(e) and len(e) == n and e.vectors[:len(s)] == s.vectors
                # another basis of the same subspace, from shuffled combinations
                combos = []
                for _ in range(len(vs) + 2):
                    coef = [rng.randint(-2, 2) for _ in vs]
                    combos.append([sum(c * v[j] for c, v in zip(coef, vs)) for j in range(n)])
                rng.shuffle(combos)
                other = sieve_basis(VectorList(F, n, combos + vs[::-1]))
                assert len(other) == len(s)


def test_criterion_12_modules(criterion):
    with criterion(12, "stacked bases in Z^3, sections, projective iff torsion free"):
        rng = random.Random(1212)
        for _ in range(200):
            gens = random_matrix(rng, rng.randint(0, 4), 3)
            basis, mult = stacked_basis(gens, 3)
            assert abs(det_bruteforce(basis)) == 1
            assert all(b % a == 0 for a, b in zip(mult, mult[1:]))
            assert same_lattice([[d * x for x in basis[i]] for i, d in enumerate(mult)], gens, 3)
        for F in FIELDS:
            for _ in range(100):
                ses = random_field_ses(rng, F)
                s = split_section(ses)
                if ses.l:
                    assert mmul(F, [list(r) for r in ses.g], s.section) == \
                        [[F(int(i == j)) for j in range(ses.l)] for i in range(ses.l)]
                assert s.decomposition_verified
        s = split_section(SES(Z, [[1], [0]], [[0, 1]]))
        assert matmul([[0, 1]], s.section) == identity(1) and s.decomposition_verified
        s = split_section(SES(Z, [[1], [1]], [[1, -1]]))
        assert matmul([[1, -1]], s.section) == identity(1) and s.decomposition_verified
        with pytest.raises(NoSection):
            split_section(SES(Z, [[2]], [[1]], relations=[[2]]))
        for _ in range(300):
            A = random_matrix(rng, rng.randint(1, 3), rng.randint(1, 3), -6, 6)
            nonzero = [d for d in determinantal_divisors(A) if d]
            torsion_free = not nonzero or nonzero[-1] == 1
            assert (classify(A).torsion == ()) == torsion_free
            assert is_projective_zmodule(A) == torsion_free


def test_criterion_13_cli(criterion):
    with criterion(13, "golden CLI outputs and a 10^4-value parse/render round trip"):
        assert len(GOLDENS) >= 30
        commands = {schema_key(g[0]).split()[0] for g in GOLDENS}
        assert commands == {"ord", "card", "set", "abgroup", "poly", "ideal", "lin"}
        for argv, code, out, err in GOLDENS:
            assert run(argv) == (code, out, err), argv
        rng = random.Random(1313)
        for _ in range(5000):
            a = random_ordinal(rng)
            text = render(a)
            back = parse_ordinal(text)
            assert back == a and render(back) == text
        for _ in range(5000):
            c = random_cardinal(rng)
            assert parse_cardinal(str(c)) == c and str(parse_cardinal(str(c))) == str(c)
