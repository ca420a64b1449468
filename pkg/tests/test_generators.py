import json

import pytest

from dbal import errors
from dbal.balance import w_partition
from dbal.generators import (
    CayleySpec,
    GPParams,
    GroupTable,
    cayley,
    circulant,
    complete,
    complete_bipartite,
    cycle,
    cyclic_group,
    dihedral_group,
    direct_product,
    disjoint_union,
    dump_cayley_json,
    from_spec,
    gp,
    hypercube,
    join,
    parse_cycles,
    path,
    perm_from_cycles,
    perm_to_cycles,
    permutation_group_closure,
)
from dbal.graph import (
    bipartition,
    degree_sequence,
    diameter,
    is_connected,
    is_regular,
)


def a4():
    gens = [parse_cycles("(1 2 3)", 4), parse_cycles("(1 2)(3 4)", 4)]
    return permutation_group_closure(4, gens)


def test_petersen():
    g = gp(5, 2)
    assert g.n == 10 and g.edge_count == 15
    # girth 5: no triangles, no 4-cycles
    for u in range(g.n):
        nb = g.neighbors(u)
        assert not any(g.has_edge(a, b) for a in nb for b in nb if a < b)
        for v in range(u + 1, g.n):
            assert len(set(nb) & set(g.neighbors(v))) <= 1


def test_gp_labelling():
    g = gp(8, 3)
    assert g.has_edge(0, 1) and g.has_edge(7, 0)
    assert g.has_edge(8, 11) and g.has_edge(8 + 6, 8 + 1)
    assert all(g.has_edge(i, 8 + i) for i in range(8))


@pytest.mark.parametrize("n,k", [(6, 3), (2, 1), (7, 0), (9, 5)])
def test_gp_bad_params(n, k):
    with pytest.raises(errors.BadParams):
        gp(n, k)


def test_gp_accepts_params_object():
    assert gp(GPParams(9, 4)) == gp(9, 4)


def test_gp_family_invariants():
    for n in range(3, 31):
        for k in range(1, (n + 1) // 2):
            g = gp(n, k)
            assert degree_sequence(g) == [3] * (2 * n) and g.edge_count == 3 * n
            assert (bipartition(g) is not None) == (n % 2 == 0 and k % 2 == 1)


def test_prism_is_cayley_of_zn_x_z2():
    for n in range(3, 12):
        grp = direct_product(cyclic_group(n), cyclic_group(2))
        s = {1 * 2 + 0, (n - 1) * 2 + 0, 0 * 2 + 1}
        c = cayley(CayleySpec(grp, frozenset(s)))
        # element (i, b) at index 2i+b corresponds to u_i (b=0) / v_i (b=1)
        relabel = {2 * i + b: i + b * n for i in range(n) for b in range(2)}
        mapped = {tuple(sorted((relabel[u], relabel[v]))) for u, v in c.edges()}
        assert mapped == set(gp(n, 1).edges())


def test_cyclic_and_dihedral():
    assert cyclic_group(1).order == 1
    d3 = dihedral_group(3)
    assert d3.order == 6 and not d3.is_abelian()
    t, r = d3.index("tr^0"), d3.index("r^1")
    assert d3.mul(t, t) == d3.identity
    tr = d3.mul(t, r)
    assert d3.mul(tr, tr) == d3.identity
    assert cyclic_group(5).is_abelian()
    with pytest.raises(errors.BadParams):
        dihedral_group(0)


def test_group_table_rejects_nonsense():
    with pytest.raises(errors.InvalidGroupTable):
        GroupTable.from_product([[0, 1], [0, 1]], 0)
    with pytest.raises(errors.InvalidGroupTable):
        # Latin square with identity 0 that is not associative
        GroupTable.from_product(
            [[0, 1, 2, 3, 4], [1, 0, 3, 4, 2], [2, 4, 0, 1, 3], [3, 2, 4, 0, 1], [4, 3, 1, 2, 0]], 0
        )


def test_closure_orders():
    tab, elems = a4()
    assert tab.order == 12
    assert elems[0] == (0, 1, 2, 3)
    assert tab.element_names[1:3] == ("(1 2 3)", "(1 2)(3 4)")
    s4 = [parse_cycles(c, 4) for c in ("(1 2)", "(2 4)", "(1 2)(3 4)")]
    assert permutation_group_closure(4, s4)[0].order == 24
    assert permutation_group_closure(4, [])[0].order == 1


def test_closure_cap():
    gens = [parse_cycles("(1 2)", 6), parse_cycles("(1 2 3 4 5 6)", 6)]
    with pytest.raises(errors.ClosureTooLarge):
        permutation_group_closure(6, gens, cap=100)
    assert permutation_group_closure(6, gens)[0].order == 720


def test_cycle_notation_round_trip():
    p = perm_from_cycles(5, [(1, 3, 4), (2, 5)])
    assert perm_to_cycles(p) == "(1 3 4)(2 5)"
    assert parse_cycles("(1 3 4)(2 5)", 5) == p
    assert perm_to_cycles(parse_cycles("()", 3)) == "()"
    with pytest.raises(errors.FormatError):
        parse_cycles("(1 2", 3)


def test_cayley_cycle():
    assert circulant(7, [1]) == cycle(7)


def test_truncated_tetrahedron():
    tab, _ = a4()
    s = frozenset(tab.index(x) for x in ("(1 2 3)", "(1 3 2)", "(1 2)(3 4)"))
    g = cayley(CayleySpec(tab, s))
    assert degree_sequence(g) == [3] * 12 and diameter(g) == 3
    pb = w_partition(g, 0, tab.index("(1 3 4)"))
    assert (pb.closer_to_u, pb.closer_to_v) == (4, 5)


def test_cayley_d9():
    d9 = dihedral_group(9)
    s = frozenset(d9.index(x) for x in ("tr^0", "tr^2", "tr^3", "r^3", "r^6"))
    g = cayley(CayleySpec(d9, s))
    assert g.n == 18 and degree_sequence(g) == [5] * 18 and diameter(g) == 3


def test_cayley_errors():
    z6 = cyclic_group(6)
    with pytest.raises(errors.IdentityInSet):
        CayleySpec(z6, frozenset({0, 1, 5}))
    with pytest.raises(errors.NotInverseClosed):
        CayleySpec(z6, frozenset({1}))
    with pytest.raises(errors.NotGenerating):
        cayley(CayleySpec(z6, frozenset({2, 4})))


def test_join_and_union():
    w = join([complete(1), cycle(4)])
    assert degree_sequence(w) == [4, 3, 3, 3, 3]
    assert join([complete(1), complete(1)]) == complete(2)
    assert join([complete(1)] * 5) == complete(5)
    with pytest.raises(errors.EmptyList):
        join([])
    assert disjoint_union([complete(1), complete(1)]).edge_count == 0
    u = disjoint_union([cycle(3), cycle(3)])
    assert u.n == 6 and u.edge_count == 6 and not is_connected(u)


def test_join_diameter_at_most_two(rng):
    for _ in range(50):
        parts = [path(rng.randint(1, 4)) for _ in range(rng.randint(2, 4))]
        assert diameter(join(parts)) <= 2


def test_join_is_order_commutative_up_to_degrees():
    a = join([cycle(5), path(3)])
    b = join([path(3), cycle(5)])
    assert sorted(degree_sequence(a)) == sorted(degree_sequence(b))


def test_standard_families():
    assert diameter(path(4)) == 3 and path(4).n == 4
    q3 = hypercube(3)
    assert is_regular(q3) and degree_sequence(q3)[0] == 3
    assert bipartition(q3) is not None and diameter(q3) == 3
    k33 = complete_bipartite(3, 3)
    assert degree_sequence(k33) == [3] * 6 and diameter(k33) == 2
    assert hypercube(0).n == 1
    for bad in (lambda: cycle(2), lambda: path(0), lambda: complete_bipartite(0, 2),
                lambda: hypercube(-1), lambda: complete(0)):
        with pytest.raises(errors.BadParams):
            bad()


def test_cayley_is_regular(rng):
    for _ in range(40):
        n = rng.randint(3, 20)
        steps = rng.sample(range(1, n), rng.randint(1, min(4, n - 1)))
        try:
            g = circulant(n, steps)
        except errors.NotGenerating:
            continue
        conn = {s % n for s in steps} | {(-s) % n for s in steps}
        assert degree_sequence(g) == [len(conn)] * n


def test_from_spec(tmp_path):
    assert from_spec("gp:5,2") == gp(5, 2)
    assert from_spec("cycle:6") == cycle(6)
    assert from_spec("path:3") == path(3)
    assert from_spec("complete:4") == complete(4)
    assert from_spec("kbip:2,3") == complete_bipartite(2, 3)
    assert from_spec("cube:3") == hypercube(3)
    assert from_spec("circulant:8:1,3") == circulant(8, [1, 3])
    tab, _ = a4()
    spec = CayleySpec(tab, frozenset(tab.index(x) for x in ("(1 2 3)", "(1 3 2)", "(1 2)(3 4)")))
    f = tmp_path / "a4.json"
    f.write_text(dump_cayley_json(spec))
    doc = json.loads(f.read_text())
    assert set(doc) == {"order", "product", "identity", "gens"}
    assert from_spec(f"cayley:@{f}") == cayley(spec)


@pytest.mark.parametrize("bad", ["gp", "gp:5", "gp:a,b", "nope:3", "circulant:8", "cayley:x.json",
                                 "cayley:@/does/not/exist.json"])
def test_from_spec_errors(bad):
    with pytest.raises(errors.FormatError):
        from_spec(bad)
