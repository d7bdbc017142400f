#!/usr/bin/env python3
"""
Unit tests for Bernoulli numbers and Faulhaber power sums
"""

import random
import unittest
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

import pytest

from latcount.arith import binomial
from latcount.bernoulli import (
    FaulhaberPoly,
    bernoulli,
    bernoulli_table,
    compute_bernoulli_numbers,
    faulhaber_poly,
    power_sum,
)
from latcount.exceptions import CorruptedCoefficientsError, InvalidArgumentError


class BernoulliUnitTests(unittest.TestCase):
    """B_k with the B_1 = -1/2 convention"""

    def test_first_values(self):
        table = bernoulli_table(3)
        self.assertEqual(table.values, (Fraction(1), Fraction(-1, 2), Fraction(1, 6), Fraction(0)))
        self.assertEqual(table.max_index, 3)
        self.assertEqual(len(table), 4)

    def test_known_values(self):
        cases = {
            4: Fraction(-1, 30),
            6: Fraction(1, 42),
            8: Fraction(-1, 30),
            10: Fraction(5, 66),
            12: Fraction(-691, 2730),
        }
        for k, expected in cases.items():
            with self.subTest(k=k):
                self.assertEqual(bernoulli(k), expected)

    def test_odd_indices_vanish(self):
        table = bernoulli_table(40)
        for k in range(3, 41, 2):
            with self.subTest(k=k):
                self.assertEqual(table[k], 0)

    def test_even_signs_alternate(self):
        table = bernoulli_table(40)
        signs = [1 if table[k] > 0 else -1 for k in range(2, 41, 2)]
        for a, b in zip(signs, signs[1:]):
            self.assertEqual(a, -b)

    def test_defining_recurrence(self):
        table = bernoulli_table(30)
        for m in range(1, 30):
            with self.subTest(m=m):
                self.assertEqual(sum(binomial(m + 1, j) * table[j] for j in range(m + 1)), 0)

    def test_seeded_extension_matches_fresh(self):
        prefix = compute_bernoulli_numbers(5)
        self.assertEqual(compute_bernoulli_numbers(20, seed=prefix), compute_bernoulli_numbers(20))

    def test_table_is_truncated_to_request(self):
        bernoulli_table(50)
        self.assertEqual(len(bernoulli_table(2)), 3)

    def test_concurrent_growth(self):
        sizes = [60, 10, 45, 80, 5, 70, 33]
        with ThreadPoolExecutor(max_workers=4) as executor:
            tables = list(executor.map(bernoulli_table, sizes))
        reference = compute_bernoulli_numbers(max(sizes))
        for size, table in zip(sizes, tables):
            with self.subTest(size=size):
                self.assertEqual(table.values, reference[:size + 1])

    def test_negative_index_rejected(self):
        with self.assertRaises(InvalidArgumentError):
            bernoulli(-1)
        with self.assertRaises(InvalidArgumentError):
            bernoulli_table(-1)
        with self.assertRaises(InvalidArgumentError):
            bernoulli_table(-50)
        self.assertEqual(bernoulli_table(0).values, (Fraction(1),))


class FaulhaberUnitTests(unittest.TestCase):
    """sum_{k=0}^{n} k^d as a polynomial in n"""

    def test_small_degree_coefficients(self):
        cases = {
            1: (Fraction(1, 2), Fraction(1, 2), Fraction(0)),
            2: (Fraction(1, 3), Fraction(1, 2), Fraction(1, 6), Fraction(0)),
            3: (Fraction(1, 4), Fraction(1, 2), Fraction(1, 4), Fraction(0), Fraction(0)),
        }
        for d, expected in cases.items():
            with self.subTest(d=d):
                poly = faulhaber_poly(d)
                self.assertEqual(poly.coeffs, expected)
                self.assertEqual(poly.degree, d)

    def test_leading_coefficients(self):
        for d in range(1, 30):
            with self.subTest(d=d):
                coeffs = faulhaber_poly(d).coeffs
                self.assertEqual(coeffs[0], Fraction(1, d + 1))
                self.assertEqual(coeffs[1], Fraction(1, 2))

    def test_power_sum_known_values(self):
        self.assertEqual(power_sum(10, 3), 3025)
        self.assertEqual(power_sum(3, 2), 14)
        self.assertEqual(power_sum(0, 0), 1)
        self.assertEqual(power_sum(100, 1), 5050)
        self.assertEqual(power_sum(0, 5), 0)
        self.assertEqual(power_sum(7, 0), 8)

    def test_power_sum_matches_direct_sum(self):
        rng = random.Random(20240607)
        for _ in range(200):
            n, d = rng.randint(0, 300), rng.randint(1, 25)
            with self.subTest(n=n, d=d):
                self.assertEqual(power_sum(n, d), sum(k ** d for k in range(n + 1)))

    @pytest.mark.slow
    def test_power_sum_full_grid(self):
        for d in range(0, 11):
            running = 0
            for n in range(0, 1001):
                running += n ** d
                with self.subTest(n=n, d=d):
                    self.assertEqual(power_sum(n, d), running)

    def test_constant_term_is_zero(self):
        for d in range(1, 30):
            with self.subTest(d=d):
                self.assertEqual(faulhaber_poly(d).coeffs[-1], 0)

    def test_non_integral_evaluation_reported(self):
        broken = FaulhaberPoly(1, (Fraction(1, 2), Fraction(1, 3), Fraction(0)))
        with self.assertRaises(CorruptedCoefficientsError):
            broken.evaluate_int(1)

    def test_invalid_arguments(self):
        with self.assertRaises(InvalidArgumentError):
            faulhaber_poly(0)
        with self.assertRaises(InvalidArgumentError):
            power_sum(-1, 2)


if __name__ == "__main__":
    unittest.main()
