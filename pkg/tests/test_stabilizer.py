from __future__ import annotations

import random

import pytest

import oracles
from conftest import draw_codes, generator_strings
from stabcheck import (
    BitVector,
    DependentGeneratorsError,
    MixedLengthsError,
    NonCommutingGeneratorsError,
    StabilizerCode,
    bsm_psm,
    css_split,
    is_css,
    pauli_from_string,
    pauli_to_string,
    standard_form,
    syndrome,
    syndrome_direct,
    syndrome_linear,
    validate,
)
from stabcheck.symplectic import Gf2Matrix, RowBasis


def single(n: int, pos: int, letter: str) -> str:
    chars = ["I"] * n
    chars[pos] = letter
    return "".join(chars)


class TestValidate:
    def test_accepts_strings_and_operators(self):
        h1 = validate(["XX", "ZZ"])
        h2 = validate([pauli_from_string("XX"), pauli_from_string("ZZ")])
        assert h1 == h2
        assert (h1.n, h1.k, h1.num_generators) == (2, 0, 2)

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            validate([])

    def test_mixed_lengths(self):
        with pytest.raises(MixedLengthsError) as exc:
            validate(["XX", "Z"])
        assert exc.value.lengths == (2, 1)

    def test_anticommuting_pair_reported_one_based(self):
        with pytest.raises(NonCommutingGeneratorsError) as exc:
            validate(["XX", "ZI"])
        assert exc.value.pairs == ((0, 1),)
        assert "(1, 2)" in str(exc.value)

    def test_all_anticommuting_pairs_reported(self):
        with pytest.raises(NonCommutingGeneratorsError) as exc:
            validate(["XII", "ZII", "IIZ", "IIX"])
        assert exc.value.pairs == ((0, 1), (2, 3))

    def test_dependent_generators(self):
        with pytest.raises(DependentGeneratorsError):
            validate(["XI", "IX", "XX"])
        with pytest.raises(DependentGeneratorsError):
            validate(["ZZ", "ZZ"])

    def test_identity_generator_is_dependent(self):
        with pytest.raises(DependentGeneratorsError):
            validate(["XX", "II"])

    def test_check_matrix_layout(self, steane):
        h = steane.h
        assert h.h_x.to01() == [pauli_to_string(g).replace("X", "1").replace("I", "0").replace("Z", "0")
                                for g in h.generators]
        # stacked matrix carries the X half in the low columns
        assert h.h.cols == 2 * h.n
        for i, g in enumerate(h.generators):
            assert h.h.rows[i] == g.x.bits | (g.z.bits << h.n)


class TestSyndrome:
    def test_steane_single_x_reads_h_z_column(self, steane):
        gens = generator_strings(steane)
        for i in range(steane.n):
            s = syndrome(steane, pauli_from_string(single(7, i, "X")))
            expected = "".join("1" if g[i] == "Z" else "0" for g in gens)
            assert str(s) == expected

    def test_steane_single_z_reads_h_x_column(self, steane):
        gens = generator_strings(steane)
        for i in range(steane.n):
            s = syndrome(steane, pauli_from_string(single(7, i, "Z")))
            expected = "".join("1" if g[i] == "X" else "0" for g in gens)
            assert str(s) == expected

    def test_two_routes_agree_on_fixture_errors(self, five_qubit):
        for e in oracles.errors_up_to(5, 2):
            p = pauli_from_string(e)
            assert syndrome(five_qubit, p) == syndrome_direct(five_qubit, p)

    def test_oracle_route(self, shor):
        gens = generator_strings(shor)
        for e in ["XIIIIIIII", "IIIIZIIII", "YIIIIIIIY", "ZZIIIIIII"]:
            assert str(syndrome(shor, pauli_from_string(e))) == oracles.syndrome_string(gens, e)

    def test_linear_route_matches(self, steane):
        p = pauli_from_string("XYZIIIZ")
        a = BitVector(7, p.x.bits)
        b = BitVector(7, p.z.bits)
        assert syndrome_linear(steane, a, b) == syndrome(steane, p)

    def test_wrong_length_rejected(self, steane):
        with pytest.raises(ValueError):
            syndrome(steane, pauli_from_string("XX"))

    def test_matrices_are_transposes(self, steane):
        sm = bsm_psm(steane)
        assert sm.bsm == steane.h.h_z.transpose()
        assert sm.psm == steane.h.h_x.transpose()


class TestStabilizerMembership:
    def test_generators_and_products(self, steane):
        gens = generator_strings(steane)
        assert steane.in_stabilizer(pauli_from_string(gens[0]))
        prod = oracles.multiply(gens[0], gens[3])
        assert steane.in_stabilizer(pauli_from_string(prod))
        assert steane.in_stabilizer(pauli_from_string("IIIIIII"))

    def test_logical_not_member(self, steane):
        assert not steane.in_stabilizer(pauli_from_string("XXXIIII"))

    def test_matches_oracle_span(self, five_qubit):
        gens = generator_strings(five_qubit)
        group = oracles.span(gens)
        for e in oracles.errors_up_to(5, 2):
            assert five_qubit.in_stabilizer(pauli_from_string(e)) == (e in group)


class TestStandardForm:
    def test_steane_shape(self, steane):
        sf = standard_form(steane)
        assert (sf.n, sf.k, sf.r) == (7, 1, 3)
        assert sorted(sf.qubit_permutation) == list(range(7))

    def test_shor_rank(self, shor):
        sf = standard_form(shor)
        assert sf.r == 2

    def test_block_layout(self, shor):
        sf = standard_form(shor)
        n, k, r = sf.n, sf.k, sf.r
        m = n - k
        low_x = (1 << n) - 1
        # top-left identity in the X half
        for i in range(r):
            x_half = sf.matrix.rows[i] & low_x
            assert x_half & ((1 << r) - 1) == 1 << i
        # bottom rows: X half zero, identity in the middle Z columns
        for i in range(r, m):
            row = sf.matrix.rows[i]
            assert row & low_x == 0
            z_half = row >> n
            mid = (z_half >> r) & ((1 << (m - r)) - 1)
            assert mid == 1 << (i - r)
        # the zero block right of the identity in the top Z rows
        for i in range(r):
            z_half = sf.matrix.rows[i] >> n
            assert (z_half >> r) & ((1 << (m - r)) - 1) == 0

    def test_block_widths(self, steane):
        sf = standard_form(steane)
        m = sf.n - sf.k
        assert sf.a1.cols == m - sf.r and len(sf.a1.rows) == sf.r
        assert sf.a2.cols == sf.k and len(sf.a2.rows) == sf.r
        assert sf.b.cols == sf.r and len(sf.b.rows) == sf.r
        assert sf.c.cols == sf.k and len(sf.c.rows) == sf.r
        assert sf.d.cols == sf.r and len(sf.d.rows) == m - sf.r
        assert sf.e.cols == sf.k and len(sf.e.rows) == m - sf.r

    def test_roundtrip_on_fixtures(self, steane, shor, five_qubit, bitflip3):
        for code in (steane, shor, five_qubit, bitflip3):
            sf = standard_form(code)
            assert sf.original_matrix() == code.h.h

    def test_roundtrip_on_random_codes(self):
        for code in draw_codes(100, 8, seed=1812):
            sf = standard_form(code)
            assert sf.original_matrix() == code.h.h

    def test_row_space_preserved(self, five_qubit):
        # permuted rows must generate the permuted original code
        sf = standard_form(five_qubit)
        n = sf.n
        permuted = []
        for row in five_qubit.h.h.rows:
            out = 0
            for pos, orig in enumerate(sf.qubit_permutation):
                out |= ((row >> orig) & 1) << pos
                out |= ((row >> (n + orig)) & 1) << (n + pos)
            permuted.append(out)
        basis = RowBasis(2 * n, permuted)
        for row in sf.matrix.rows:
            assert basis.contains(row)


class TestCssSplit:
    def test_steane_splits(self, steane):
        split = css_split(steane)
        assert split is not None
        assert len(split.x_block.rows) == 3
        assert len(split.z_block.rows) == 3

    def test_five_qubit_does_not(self, five_qubit):
        assert css_split(five_qubit) is None
        assert not is_css(five_qubit)

    def test_split_survives_row_mixing(self, steane):
        # multiply an X generator by a Z generator: no generator is pure any
        # more, but the row space is unchanged
        gens = generator_strings(steane)
        mixed = [oracles.multiply(gens[0], gens[3])] + gens[1:]
        code = StabilizerCode.from_strings(*mixed)
        split = css_split(code)
        assert split is not None
        assert is_css(code)

    def test_split_blocks_span_pure_parts(self, shor):
        split = css_split(shor)
        x_basis = RowBasis(9, split.x_block.rows)
        for g in generator_strings(shor):
            if "Z" not in g:
                p = pauli_from_string(g)
                assert x_basis.contains(p.x.bits)

    def test_random_css_codes_detected(self):
        import stabcheck as sc

        rng = random.Random(7)
        found = 0
        while found < 25:
            code = sc.random_css_code(6, 2, 2, rng)
            if code is None:
                continue
            found += 1
            assert is_css(code)

    def test_non_css_rejected(self):
        code = StabilizerCode.from_strings("XZZXI", "IXZZX")
        assert css_split(code) is None


def test_from_strings_metadata():
    code = StabilizerCode.from_strings("XX", "ZZ", label="bell", designed_distance=2)
    assert code.label == "bell"
    assert code.default_t == 0
    assert StabilizerCode.from_strings("XX", "ZZ").default_t is None


def test_check_matrix_direct_construction_validates():
    with pytest.raises(NonCommutingGeneratorsError):
        StabilizerCode.from_strings("XI", "ZI")
