#!/usr/bin/env python3
"""
Tests for coefficient vectors, transfer matrices and the closed forms of c(d, d-j)
"""

import unittest
from fractions import Fraction as F

from latcount.coefficients import (
    CLOSED_FORM_MAX_J,
    CoeffVector,
    coeff_closed_form,
    coeff_vector,
    coeff_via_symmetric_sums,
    first_row_product,
    forward_differences,
    transfer_matrix,
    uncorrected_cubic_coefficient,
)
from latcount.arith import factorial
from latcount.engines import WalkSpec, count_closed_form
from latcount.exceptions import InvalidArgumentError, UnsupportedIndexError


class CoeffVectorTests(unittest.TestCase):
    """c_d from the transfer-matrix chain"""

    KNOWN = {
        1: (F(1), F(1)),
        2: (F(1), F(2), F(1)),
        3: (F(2, 3), F(2), F(7, 3), F(1)),
        4: (F(1, 3), F(4, 3), F(8, 3), F(8, 3), F(1)),
        5: (F(2, 15), F(2, 3), F(2), F(10, 3), F(43, 15), F(1)),
    }

    def test_known_vectors(self):
        for d, expected in self.KNOWN.items():
            with self.subTest(d=d):
                self.assertEqual(coeff_vector(d).entries, expected)

    def test_evaluation_matches_counts(self):
        for d in range(1, 13):
            vector = coeff_vector(d)
            for n in range(0, 30, 3):
                with self.subTest(d=d, n=n):
                    self.assertEqual(vector.evaluate(n), count_closed_form(WalkSpec(d, n)))

    def test_constant_term_is_one(self):
        for d in range(1, 20):
            with self.subTest(d=d):
                self.assertEqual(coeff_vector(d).coefficient(0), 1)

    def test_as_strings(self):
        self.assertEqual(coeff_vector(5).as_strings(), ["2/15", "2/3", "2", "10/3", "43/15", "1"])

    def test_to_latex(self):
        self.assertEqual(coeff_vector(1).to_latex(), "n + 1")
        self.assertEqual(coeff_vector(2).to_latex(), "n^{2} + 2 n + 1")
        self.assertEqual(coeff_vector(3).to_latex(), r"\frac{2}{3} n^{3} + 2 n^{2} + \frac{7}{3} n + 1")
        self.assertEqual(CoeffVector(1, (F(-1, 2), F(0))).to_latex(), r"-\frac{1}{2} n")
        self.assertEqual(CoeffVector(1, (F(0), F(0))).to_latex(), "0")

    def test_wrong_length_rejected(self):
        with self.assertRaises(InvalidArgumentError):
            CoeffVector(2, (F(1), F(1)))

    def test_invalid_dimension(self):
        with self.assertRaises(InvalidArgumentError):
            coeff_vector(0)


class TransferMatrixTests(unittest.TestCase):
    """M_d maps c_d to c_{d+1}"""

    def test_small_matrices(self):
        fixtures = {
            1: ((F(1), F(0)),
                (F(0), F(2)),
                (F(0), F(1))),
            2: ((F(2, 3), F(0), F(0)),
                (F(0), F(1), F(0)),
                (F(1, 3), F(0), F(2)),
                (F(0), F(0), F(1))),
            3: ((F(1, 2), F(0), F(0), F(0)),
                (F(0), F(2, 3), F(0), F(0)),
                (F(1, 2), F(0), F(1), F(0)),
                (F(0), F(1, 3), F(0), F(2)),
                (F(0), F(0), F(0), F(1))),
        }
        for d, rows in fixtures.items():
            with self.subTest(d=d):
                self.assertEqual(transfer_matrix(d).rows, rows)

    def test_shape(self):
        for d in range(1, 10):
            with self.subTest(d=d):
                self.assertEqual(transfer_matrix(d).shape, (d + 2, d + 1))

    def test_lower_triangular_structure(self):
        for d in range(1, 12):
            rows = transfer_matrix(d).rows
            for r in range(d):
                with self.subTest(d=d, r=r):
                    self.assertEqual(rows[r][r], F(2, d + 1 - r))
                    self.assertTrue(all(rows[r][i] == 0 for i in range(r + 1, d + 1)))
                    if r >= 1:
                        self.assertEqual(rows[r][r - 1], 0)

    def test_apply(self):
        for d in range(1, 12):
            with self.subTest(d=d):
                self.assertEqual(transfer_matrix(d).apply(coeff_vector(d)), coeff_vector(d + 1))

    def test_apply_dimension_mismatch(self):
        with self.assertRaises(InvalidArgumentError):
            transfer_matrix(3).apply(coeff_vector(2))

    def test_first_row_product(self):
        for d in range(1, 15):
            with self.subTest(d=d):
                self.assertEqual(first_row_product(d), F(2 ** (d - 1), factorial(d)))


class ClosedFormTests(unittest.TestCase):
    """Closed forms for c(d, d-j), j <= 4, against the matrix and symmetric-sum routes"""

    def test_specific_values(self):
        self.assertEqual(coeff_closed_form(5, 4), F(43, 15))
        self.assertEqual(coeff_closed_form(5, 3), F(10, 3))
        self.assertEqual(coeff_closed_form(4, 3), F(8, 3))
        self.assertEqual(coeff_closed_form(3, 2), F(7, 3))

    def test_three_routes_reconcile(self):
        for d in range(1, 13):
            vector = coeff_vector(d)
            for j in range(min(CLOSED_FORM_MAX_J, d - 1) + 1):
                with self.subTest(d=d, j=j):
                    self.assertEqual(vector.entries[j], coeff_closed_form(d, j))
                    self.assertEqual(vector.entries[j], coeff_via_symmetric_sums(d, j))

    def test_symmetric_sums_cover_every_index(self):
        for d in range(1, 15):
            vector = coeff_vector(d)
            for j in range(d):
                with self.subTest(d=d, j=j):
                    self.assertEqual(coeff_via_symmetric_sums(d, j), vector.entries[j])

    def test_uncorrected_cubic_form(self):
        self.assertEqual(uncorrected_cubic_coefficient(4), 16)
        for d in range(3, 15):
            with self.subTest(d=d):
                self.assertEqual(uncorrected_cubic_coefficient(d), 6 * coeff_closed_form(d, 3))
                self.assertNotEqual(uncorrected_cubic_coefficient(d), coeff_vector(d).coefficient(d - 3))

    def test_unsupported_index(self):
        with self.assertRaises(UnsupportedIndexError) as ctx:
            coeff_closed_form(6, 5)
        self.assertEqual(ctx.exception.error_code, "UNSUPPORTED_INDEX")
        with self.assertRaises(UnsupportedIndexError):
            coeff_closed_form(6, -1)

    def test_index_range_checks(self):
        with self.assertRaises(InvalidArgumentError):
            coeff_closed_form(2, 3)
        with self.assertRaises(InvalidArgumentError):
            coeff_via_symmetric_sums(3, 3)
        with self.assertRaises(InvalidArgumentError):
            uncorrected_cubic_coefficient(2)


class ForwardDifferenceTests(unittest.TestCase):

    def test_cubic(self):
        values = [F(n ** 3) for n in range(8)]
        self.assertEqual(forward_differences(values, 3), [F(6)] * 5)
        self.assertEqual(forward_differences(values, 4), [F(0)] * 4)
        self.assertEqual(forward_differences(values, 0), values)


if __name__ == "__main__":
    unittest.main()
