import pytest

import ncgraph as ng


def iso_pair(name_a, name_b, max_order=512):
    g_a = ng.construct(name_a, max_order=max_order)
    g_b = ng.construct(name_b, max_order=max_order)
    phi = ng.find_isomorphism(ng.build_nc_graph(g_a), ng.build_nc_graph(g_b))
    assert phi is not None
    return g_a, g_b, phi


class TestPairAudit:
    def test_dihedral_dicyclic_16(self):
        g_a, g_b, phi = iso_pair("dihedral(8)", "dicyclic(4)")
        audit = ng.audit_isomorphic_pair(g_a, g_b, phi)
        assert audit.verdict == "consistent"
        assert audit.both_nilpotent
        assert audit.both_irregular
        by_name = {i.name: i for i in audit.items}
        assert by_name["noncentral_counts"].lhs == 14
        assert by_name["degree_gaps"].passed is True
        assert by_name["centralizer_center_gaps"].passed is True
        # the recorded-only comparison is vacuous here: every centralizer in
        # these two groups is abelian
        literal = by_name["center_gap_vs_whole_order"]
        assert literal.passed is None
        assert literal.lhs == 0
        assert "vacuous" in literal.witness

    def test_vertex_pairs_track_centralizer_sizes(self):
        g_a, g_b, phi = iso_pair("dihedral(8)", "dicyclic(4)")
        audit = ng.audit_isomorphic_pair(g_a, g_b, phi)
        assert len(audit.vertex_pairs) == 14
        for elem_a, elem_b, ca, cb in audit.vertex_pairs:
            assert ca == ng.centralizer_size(g_a, elem_a)
            assert cb == ng.centralizer_size(g_b, elem_b)
            assert ca == cb  # equal orders force equal centralizers here

    def test_divisibility_rows_trivial_for_equal_orders(self):
        g_a, g_b, phi = iso_pair("dihedral(6)", "dicyclic(3)")
        rows = ng.divisibility_check(g_a, g_b, phi)
        assert len(rows) == 10
        for elem_a, cb, dividend, ok in rows:
            assert dividend == 0 and ok

    def test_nonabelian_centralizers_compared(self):
        # two order-216 groups with isomorphic graphs whose vertex
        # centralizers include non-abelian ones
        g_a, g_b, phi = iso_pair("product(dihedral(4),heisenberg(3,1))",
                                 "product(dicyclic(2),heisenberg(3,1))")
        audit = ng.audit_isomorphic_pair(g_a, g_b, phi)
        assert audit.verdict == "consistent"
        by_name = {i.name: i for i in audit.items}
        graphs_item = by_name["centralizer_graphs_isomorphic"]
        assert graphs_item.passed is True
        assert graphs_item.rhs > 0          # some graphs really got compared
        assert graphs_item.lhs == graphs_item.rhs
        literal = by_name["center_gap_vs_whole_order"]
        assert literal.lhs == 66            # non-vacuous on 66 vertices
        assert literal.witness == "differs"

    def test_non_nilpotent_pair_still_audits(self):
        g_a, g_b, phi = iso_pair("dihedral(6)", "dicyclic(3)")
        audit = ng.audit_isomorphic_pair(g_a, g_b, phi)
        assert audit.verdict == "consistent"
        assert not audit.both_nilpotent

    def test_to_dict_is_json_ready(self):
        import json
        g_a, g_b, phi = iso_pair("dihedral(8)", "dicyclic(4)")
        audit = ng.audit_isomorphic_pair(g_a, g_b, phi)
        text = json.dumps(audit.to_dict())
        assert "noncentral_counts" in text


class TestCentralizerChain:
    def test_ac_group_has_zero_steps(self):
        chain = ng.centralizer_chain(ng.construct("dihedral(8)"))
        assert chain.orders == (16,)
        assert chain.steps == 0
        assert chain.chosen == ()

    def test_heisenberg_243_descends_once(self):
        chain = ng.centralizer_chain(ng.construct("heisenberg(3,2)"))
        assert chain.orders == (243, 81)
        assert chain.steps == 1

    def test_product_of_nonabelian_descends(self):
        g = ng.construct("product(dicyclic(2),heisenberg(3,1))")
        chain = ng.centralizer_chain(g)
        assert chain.steps >= 1
        assert chain.orders[0] == 216
        # strictly decreasing and within the log2 bound
        for a, b in zip(chain.orders, chain.orders[1:]):
            assert b < a and a % b == 0
        assert chain.steps <= g.order.bit_length()

    def test_abelian_rejected(self):
        with pytest.raises(ng.AbelianInput):
            ng.centralizer_chain(ng.construct("cyclic(6)"))

    def test_seeded_pickers_always_terminate(self):
        g = ng.construct("product(dicyclic(2),heisenberg(3,1))")
        lengths = set()
        for seed in range(10):
            chain = ng.centralizer_chain(g, picker=ng.seeded_picker(seed))
            lengths.add(chain.steps)
            assert chain.steps <= g.order.bit_length()
        assert lengths  # every run terminated

    def test_bad_picker_rejected(self):
        g = ng.construct("heisenberg(3,2)")
        with pytest.raises(ValueError):
            ng.centralizer_chain(g, picker=lambda grp, candidates: -1)

    def test_deterministic_default(self):
        g = ng.construct("heisenberg(3,2)")
        a = ng.centralizer_chain(g)
        b = ng.centralizer_chain(g)
        assert a.chosen == b.chosen and a.orders == b.orders


class TestLargeCentralizerWitness:
    def test_two_sylow_product_is_strict(self):
        g = ng.construct("product(dicyclic(2),heisenberg(3,1))")
        wit = ng.large_centralizer_witness(g)
        assert wit.centralizer_order == 108
        assert wit.square == 108 ** 2 == 11664
        assert wit.bound == 216 * 6 == 1296
        assert wit.strict

    def test_small_dihedral(self):
        wit = ng.large_centralizer_witness(ng.construct("dihedral(3)"))
        assert (wit.centralizer_order, wit.square, wit.bound) == (3, 9, 6)

    def test_abelian_rejected(self):
        with pytest.raises(ng.AbelianInput):
            ng.large_centralizer_witness(ng.construct("abelian(4,2)"))


class TestSylowSplit:
    def test_dihedral_16(self):
        sp = ng.split_one_nonabelian_sylow(ng.construct("dihedral(8)"))
        assert (sp.prime, sp.order_exp, sp.center_exp, sp.cofactor) == (2, 4, 1, 1)
        assert sp.class_exps == (1, 2)
        assert sp.p_part.order == 16

    def test_with_cofactor(self):
        sp = ng.split_one_nonabelian_sylow(
            ng.construct("product(dihedral(8),abelian(3))"))
        assert (sp.prime, sp.order_exp, sp.cofactor) == (2, 4, 3)

    def test_rejects_non_nilpotent(self):
        with pytest.raises(ng.WrongShape):
            ng.split_one_nonabelian_sylow(ng.construct("dihedral(6)"))

    def test_rejects_two_nonabelian_factors(self):
        with pytest.raises(ng.WrongShape):
            ng.split_one_nonabelian_sylow(
                ng.construct("product(dicyclic(2),heisenberg(3,1))"))


class TestSamePrimeAudit:
    def test_dihedral_dicyclic_16(self):
        g_a, g_b, phi = iso_pair("dihedral(8)", "dicyclic(4)")
        audit = ng.same_prime_audit(g_a, g_b, phi)
        assert audit.verdict == "consistent"
        assert audit.prime == 2
        assert (audit.center_exp_a, audit.center_exp_b) == (1, 1)
        assert (audit.order_exp_a, audit.order_exp_b) == (4, 4)
        assert (audit.cofactor_a, audit.cofactor_b) == (1, 1)
        assert audit.class_exps_a == audit.class_exps_b == (1, 2)
        names = {i.name for i in audit.items}
        assert {"noncentral_gap_factored", "class_count_alignment",
                "smallest_degrees_difference", "center_exponents_equal",
                "centralizer_exponents_match", "cofactor_orders_equal",
                "p_part_orders_equal"} <= names
        assert all(i.passed for i in audit.items)

    def test_with_cofactors(self):
        g_a, g_b, phi = iso_pair("product(dihedral(8),abelian(9))",
                                 "product(dicyclic(4),abelian(3,3))")
        audit = ng.same_prime_audit(g_a, g_b, phi)
        assert audit.verdict == "consistent"
        assert (audit.cofactor_a, audit.cofactor_b) == (9, 9)

    def test_regular_graph_rejected(self):
        g_a, g_b, phi = iso_pair("dihedral(4)", "dicyclic(2)")
        with pytest.raises(ng.RegularGraph):
            ng.same_prime_audit(g_a, g_b, phi)

    def test_non_nilpotent_rejected(self):
        g_a, g_b, phi = iso_pair("dihedral(6)", "dicyclic(3)")
        with pytest.raises(ng.WrongShape):
            ng.same_prime_audit(g_a, g_b, phi)


class TestTwoSylowAudit:
    def test_order_216(self):
        g = ng.construct("product(dicyclic(2),heisenberg(3,1))")
        audit = ng.two_nonabelian_sylow_audit(g)
        assert audit.verdict == "consistent"
        by_name = {i.name: i for i in audit.items}
        assert (by_name["centralizer_center_gap"].lhs,
                by_name["centralizer_center_gap"].rhs) == (54, 54)
        assert (by_name["center_growth"].lhs,
                by_name["center_growth"].rhs) == (6, 6)
        assert (by_name["whole_minus_centralizer"].lhs,
                by_name["whole_minus_centralizer"].rhs) == (108, 108)

    def test_order_1080_with_cofactor(self):
        g = ng.construct("product(dicyclic(2),heisenberg(3,1),cyclic(5))",
                         max_order=2048)
        audit = ng.two_nonabelian_sylow_audit(g)
        assert audit.verdict == "consistent"
        by_name = {i.name: i for i in audit.items}
        assert by_name["centralizer_center_gap"].lhs == 270
        assert by_name["center_growth"].lhs == 30
        assert by_name["whole_minus_centralizer"].lhs == 540

    def test_valuations_recorded(self):
        g = ng.construct("product(dicyclic(2),heisenberg(3,1))")
        audit = ng.two_nonabelian_sylow_audit(g, valuation_prime=3)
        assert audit.valuation_prime == 3
        assert audit.valuations  # at least one row

    def test_rejects_single_nonabelian_sylow(self):
        with pytest.raises(ng.WrongShape):
            ng.two_nonabelian_sylow_audit(ng.construct("dihedral(8)"))


class TestCrossPrimeScan:
    def test_small_box_is_empty(self):
        scan = ng.cross_prime_scan(max_prime=5, max_exp=8, max_cofactor=20)
        assert scan.verdict == "empty"
        assert scan.survivors == ()
        assert scan.candidates > 0
        # the one repunit coincidence in range: 31 in bases 2 and 5, reached
        # from the exponent-7 configuration (the shortest that matches values)
        assert any(row[4] == 31 for row in scan.repunit_coincidences)
        for base1, base2, count in scan.uniqueness_rows:
            assert count <= 1

    def test_to_dict_round_trips_to_json(self):
        import json
        scan = ng.cross_prime_scan(max_prime=3, max_exp=5, max_cofactor=10)
        parsed = json.loads(json.dumps(scan.to_dict()))
        assert parsed["verdict"] == "empty"
