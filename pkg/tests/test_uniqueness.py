import copy
import json
import random

import pytest

from aslattice import (
    BudgetExceeded,
    InvalidCertificate,
    PreconditionViolated,
    RealizationKind,
    build_poset,
    certificate_from_json,
    certificate_to_json,
    check_unique,
    enumerate_ideals,
    is_direct_sum_of_chains,
    is_realizable,
    search_compatible_asls,
    straightening_relations,
    uniqueness_certificate,
    validate_certificate,
)
from aslattice.straightening import PairMap
from aslattice.uniqueness import induction_parameter
from conftest import antichain, chain, corpus, sum_of_chains


def canonical_pm(lat):
    return straightening_relations(lat, RealizationKind.ORDER)


class TestRealizability:
    def test_canonical_kinds_always_realizable(self):
        for p in corpus(4):
            lat = enumerate_ideals(p)
            for kind in RealizationKind:
                pm = straightening_relations(lat, kind)
                real = is_realizable(lat, pm)
                assert real is not None
                assert real.satisfies(pm)
                exps = list(real.exponents.values())
                assert len(set(exps)) == len(lat)
                assert all(e[-1] == 1 for e in exps)

    def test_v_delta_table_realizable(self, v_poset):
        p = v_poset
        lat = enumerate_ideals(p)
        a, b = p.mask_of(["p"]), p.mask_of(["p'"])
        pm = PairMap(lattice=lat, rhs={(a, b): (0, p.full_mask)})
        assert is_realizable(lat, pm) is not None

    def test_non_canonical_on_sum_of_chains_fails(self):
        # chain(2)+point: widen one relation beyond the canonical join
        p = sum_of_chains(2, 1)
        lat = enumerate_ideals(p)
        a = p.mask_of(["c0_0"])
        b = p.mask_of(["c1_0"])
        pm = canonical_pm(lat)
        rhs = dict(pm.rhs)
        key = pm.key(a, b)
        rhs[key] = (0, p.full_mask)  # not the canonical union {c0_0, c1_0}
        assert rhs[key] != pm.rhs[key]
        bad = PairMap(lattice=lat, rhs=rhs)
        assert is_realizable(lat, bad) is None

    def test_every_single_deviation_fails_on_sums_of_chains(self):
        # uniqueness in the strongest per-entry form: perturbing any one
        # relation of the canonical system kills realizability
        from aslattice.uniqueness import _candidate_rhs

        for p in corpus(4):
            if not is_direct_sum_of_chains(p):
                continue
            lat = enumerate_ideals(p)
            pm = canonical_pm(lat)
            for pair in lat.incomparable_pairs:
                for cand in _candidate_rhs(lat, *pair):
                    if cand == pm.rhs[pair]:
                        continue
                    rhs = dict(pm.rhs)
                    rhs[pair] = cand
                    assert is_realizable(lat, PairMap(lattice=lat, rhs=rhs)) is None, (
                        p,
                        pair,
                        cand,
                    )


class TestSearch:
    def test_v_exactly_two(self, v_poset):
        p = v_poset
        lat = enumerate_ideals(p)
        systems = search_compatible_asls(lat)
        assert len(systems) == 2
        a, b = p.mask_of(["p"]), p.mask_of(["p'"])
        tables = {s.rhs[(a, b)] for s in systems}
        assert tables == {(0, p.mask_of(["p", "p'"])), (0, p.full_mask)}

    def test_lambda_exactly_two(self, lam_poset):
        p = lam_poset
        lat = enumerate_ideals(p)
        systems = search_compatible_asls(lat)
        assert len(systems) == 2
        a, b = p.mask_of(["q", "p"]), p.mask_of(["q", "p'"])
        tables = {s.rhs[(a, b)] for s in systems}
        assert tables == {(p.mask_of(["q"]), p.full_mask), (0, p.full_mask)}

    def test_antichain2_exactly_one(self):
        lat = enumerate_ideals(antichain(2))
        assert len(search_compatible_asls(lat)) == 1

    def test_chain_trivial(self):
        lat = enumerate_ideals(chain(3))
        systems = search_compatible_asls(lat)
        assert len(systems) == 1
        assert systems[0].rhs == {}

    def test_count_one_iff_sum_of_chains(self):
        # up to n=5 for every lattice small enough to search
        for p in corpus(5):
            lat = enumerate_ideals(p)
            if len(lat) > 12:
                continue
            systems = search_compatible_asls(lat)
            if is_direct_sum_of_chains(p):
                assert len(systems) == 1
            else:
                assert len(systems) >= 2

    def test_canonical_tables_among_results(self):
        for p in corpus(4):
            lat = enumerate_ideals(p)
            if len(lat) > 12:
                continue
            systems = search_compatible_asls(lat)
            for kind in RealizationKind:
                assert straightening_relations(lat, kind) in systems

    def test_budget(self, v_poset):
        lat = enumerate_ideals(v_poset)
        with pytest.raises(BudgetExceeded):
            search_compatible_asls(lat, node_budget=1)


class TestCheckUnique:
    def test_sum_of_chains_unique(self):
        lat = enumerate_ideals(sum_of_chains(3, 2))
        res = check_unique(lat)
        assert res.unique
        assert res.certificate is not None
        assert res.witness_kinds is None

    def test_v_witness(self, v_poset):
        res = check_unique(enumerate_ideals(v_poset))
        assert not res.unique
        assert res.witness_kinds == (RealizationKind.ORDER, RealizationKind.CHAIN_DUAL)

    def test_lambda_witness(self, lam_poset):
        res = check_unique(enumerate_ideals(lam_poset))
        assert not res.unique
        assert res.witness_kinds == (RealizationKind.ORDER, RealizationKind.CHAIN)

    def test_verdict_matches_structure(self):
        for p in corpus(5):
            lat = enumerate_ideals(p)
            assert check_unique(lat).unique == is_direct_sum_of_chains(p)

    def test_witness_systems_distinct_and_realizable(self):
        for p in corpus(4):
            if is_direct_sum_of_chains(p):
                continue
            lat = enumerate_ideals(p)
            res = check_unique(lat)
            ka, kb = res.witness_kinds
            pm_a = straightening_relations(lat, ka)
            pm_b = straightening_relations(lat, kb)
            assert pm_a != pm_b
            assert pm_a.rhs[res.witness_pair] == res.witness_rhs[0]
            assert pm_b.rhs[res.witness_pair] == res.witness_rhs[1]
            assert is_realizable(lat, pm_a) is not None
            assert is_realizable(lat, pm_b) is not None


class TestCertificates:
    def test_precondition(self, v_poset):
        with pytest.raises(PreconditionViolated):
            uniqueness_certificate(enumerate_ideals(v_poset))

    def test_antichain2_single_base_step(self):
        p = antichain(2)
        cert = uniqueness_certificate(enumerate_ideals(p))
        assert len(cert.steps) == 1
        step = cert.steps[0]
        assert step.k == 0
        assert step.refutations == ()
        assert step.rhs == (0, p.full_mask)

    def test_chain2_plus_point_steps(self):
        # {a<b, c}: the pair ({a,b},{a,c}) has k=1 and is refuted through
        # the complement side only (its union is already everything)
        p = build_poset(["a", "b", "c"], [("a", "b")])
        cert = uniqueness_certificate(enumerate_ideals(p))
        by_pair = {
            tuple(sorted(tuple(p.labels_of(m)) for m in s.pair)): s for s in cert.steps
        }
        step = by_pair[(("a", "b"), ("a", "c"))]
        assert step.k == 1
        assert [r.side for r in step.refutations] == ["meet"]
        assert is_direct_sum_of_chains(p)

    def test_three_points_isolated_adjoin(self):
        # {a}, {b} with alternative P: no covered element exists, so the
        # smallest isolated element is adjoined to the second component
        p = build_poset(["a", "b", "c"], [])
        lat = enumerate_ideals(p)
        cert = uniqueness_certificate(lat)
        a, b = p.mask_of(["a"]), p.mask_of(["b"])
        step = next(s for s in cert.steps if s.pair == (a, b))
        assert step.k == 1
        joinref = [
            r for r in step.refutations if r.side == "join" and r.alternative == p.full_mask
        ]
        assert len(joinref) == 1
        ref = joinref[0]
        assert ref.p is None
        assert ref.q == p.index_of("c")
        assert ref.alpha1 == p.mask_of(["b", "c"])
        assert ref.prior_pair == (a, p.mask_of(["b", "c"]))

    def test_steps_sorted_by_parameter(self):
        for lengths in [(2, 1), (1, 1, 1), (2, 2), (3, 1)]:
            p = sum_of_chains(*lengths)
            cert = uniqueness_certificate(enumerate_ideals(p))
            ks = [s.k for s in cert.steps]
            assert ks == sorted(ks)
            for s in cert.steps:
                assert s.k == induction_parameter(p, *s.pair)

    def test_validates(self):
        for lengths in [(1,), (2,), (1, 1), (2, 1), (1, 1, 1), (2, 2), (3, 2)]:
            p = sum_of_chains(*lengths)
            cert = uniqueness_certificate(enumerate_ideals(p))
            ok, reason = validate_certificate(p, cert)
            assert ok, (lengths, reason)

    def test_wrong_poset_rejected(self):
        p = sum_of_chains(2, 1)
        q = sum_of_chains(1, 1, 1)
        cert = uniqueness_certificate(enumerate_ideals(p))
        ok, reason = validate_certificate(q, cert)
        assert not ok

    def test_hand_mutations_rejected(self):
        p = sum_of_chains(2, 1)
        cert = uniqueness_certificate(enumerate_ideals(p))
        doc = certificate_to_json(cert)

        tampered = copy.deepcopy(doc)
        tampered["steps"][1]["rhs"][1] = list(tampered["steps"][1]["pair"][0])
        ok, _ = validate_certificate(p, certificate_from_json(tampered, p))
        assert not ok

        tampered = copy.deepcopy(doc)
        tampered["steps"][0]["k"] += 1
        ok, _ = validate_certificate(p, certificate_from_json(tampered, p))
        assert not ok

        tampered = copy.deepcopy(doc)
        step = next(s for s in tampered["steps"] if s["refutations"])
        step["refutations"][0]["swapped"] = not step["refutations"][0]["swapped"]
        ok, _ = validate_certificate(p, certificate_from_json(tampered, p))
        assert not ok

        tampered = copy.deepcopy(doc)
        step = next(s for s in tampered["steps"] if s["refutations"])
        del step["refutations"][0]
        ok, _ = validate_certificate(p, certificate_from_json(tampered, p))
        assert not ok

    def test_json_roundtrip(self):
        p = sum_of_chains(2, 2)
        cert = uniqueness_certificate(enumerate_ideals(p))
        doc = json.loads(json.dumps(certificate_to_json(cert)))
        again = certificate_from_json(doc, p)
        assert again == cert
        assert validate_certificate(p, again)[0]

    def test_malformed_json(self):
        p = sum_of_chains(2, 1)
        with pytest.raises(InvalidCertificate):
            certificate_from_json({"format": "bogus"}, p)
        with pytest.raises(InvalidCertificate):
            certificate_from_json({"format": "uniqueness-certificate/1", "elements": ["zz"]}, p)


def mutate_once(doc: dict, rng: random.Random) -> dict:
    """Return a deep copy of a certificate document with one field changed
    to a different value of the same shape."""
    doc = copy.deepcopy(doc)
    labels = list(doc["elements"])

    def other_subset(current):
        while True:
            cand = sorted(rng.sample(labels, rng.randint(0, len(labels))))
            if cand != sorted(current):
                return cand

    sites = [("elements", i) for i in range(len(labels))]
    sites.append(("covers",))
    for si, step in enumerate(doc["steps"]):
        sites.append(("k", si))
        sites.append(("pair", si, rng.randint(0, 1)))
        sites.append(("rhs", si, rng.randint(0, 1)))
        for ri, _ in enumerate(step["refutations"]):
            sites.append(("side", si, ri))
            sites.append(("alternative", si, ri))
            sites.append(("swapped", si, ri))
            sites.append(("p", si, ri))
            sites.append(("q", si, ri))
            sites.append(("alpha1", si, ri))
            sites.append(("prior_pair", si, ri, rng.randint(0, 1)))
            sites.append(("collision", si, ri, rng.randint(0, 1), rng.randint(0, 2)))
    site = sites[rng.randrange(len(sites))]
    kind = site[0]
    if kind == "elements":
        doc["elements"][site[1]] = doc["elements"][site[1]] + "_mut"
        return doc
    if kind == "covers":
        if doc["covers"] and rng.random() < 0.5:
            doc["covers"].pop(rng.randrange(len(doc["covers"])))
        else:
            while True:
                pair = [rng.choice(labels), rng.choice(labels)]
                if pair not in doc["covers"]:
                    doc["covers"].append(pair)
                    break
        return doc
    si = site[1]
    step = doc["steps"][si]
    if kind == "k":
        step["k"] += rng.choice([-1, 1, 2])
    elif kind in ("pair", "rhs"):
        step[kind][site[2]] = other_subset(step[kind][site[2]])
    else:
        ref = step["refutations"][site[2]]
        if kind == "side":
            ref["side"] = "meet" if ref["side"] == "join" else "join"
        elif kind == "swapped":
            ref["swapped"] = not ref["swapped"]
        elif kind in ("alternative", "alpha1"):
            ref[kind] = other_subset(ref[kind])
        elif kind in ("p", "q"):
            cands = [x for x in labels + ([None] if kind == "p" else []) if x != ref[kind]]
            ref[kind] = rng.choice(cands)
        elif kind == "prior_pair":
            ref["prior_pair"][site[3]] = other_subset(ref["prior_pair"][site[3]])
        else:
            ref["collision"][site[3]][site[4]] = other_subset(ref["collision"][site[3]][site[4]])
    return doc


class TestMutationRejection:
    def test_random_mutations_rejected(self):
        rng = random.Random(20240817)
        for lengths in [(2, 1), (1, 1, 1), (2, 2)]:
            p = sum_of_chains(*lengths)
            cert = uniqueness_certificate(enumerate_ideals(p))
            doc = certificate_to_json(cert)
            for _ in range(40):
                mutated = mutate_once(doc, rng)
                try:
                    bad = certificate_from_json(mutated, p)
                except InvalidCertificate:
                    continue  # rejected at parse time
                ok, _ = validate_certificate(p, bad)
                assert not ok
