#!/usr/bin/env python3
"""
Tests for the cross-engine verification harness and the engine benchmarks
"""

import unittest
from unittest.mock import patch

import pytest

from latcount import engines
from latcount.benchmark import BenchRecord, benchmark_engine, digests_agree, run_benchmarks
from latcount.config import BruteForceLimit
from latcount.engines import ANALYTIC_ENGINES, WalkSpec
from latcount.exceptions import InvalidArgumentError, LimitExceededError
from latcount.verification import cubic_discrepancy_note, run_verification


class VerificationTests(unittest.TestCase):
    """run_verification over small grids"""

    def test_default_grid_is_clean(self):
        report = run_verification(4, 10, limit=BruteForceLimit(4, 12))
        self.assertTrue(report.ok)
        self.assertEqual(report.mismatches, [])
        self.assertEqual(len(report.grid), 4 * 11)
        self.assertTrue(all("brute" in dict(cell.counts) for cell in report.grid))
        self.assertEqual(len(report.notes), 1)
        self.assertIn("1/6", report.notes[0])

    def test_trivial_grid(self):
        report = run_verification(1, 0)
        self.assertTrue(report.ok)
        self.assertEqual(len(report.grid), 1)
        self.assertEqual(set(dict(report.grid[0].counts).values()), {"1"})
        self.assertEqual(report.notes, [])

    def test_grid_order(self):
        report = run_verification(3, 4, max_workers=3)
        keys = [(cell.d, cell.n) for cell in report.grid]
        self.assertEqual(keys, sorted(keys))
        for cell in report.grid:
            names = [name for name, _ in cell.counts]
            self.assertEqual(names, sorted(names))

    def test_brute_only_inside_limit(self):
        report = run_verification(3, 5, limit=BruteForceLimit(2, 3))
        for cell in report.grid:
            with self.subTest(d=cell.d, n=cell.n):
                has_brute = "brute" in dict(cell.counts)
                self.assertEqual(has_brute, cell.n == 0 or (cell.d <= 2 and cell.n <= 3))

    def test_coefficient_checks(self):
        report = run_verification(5, 2)
        pairs = [(check.d, check.j) for check in report.coefficient_checks]
        expected = [(d, j) for d in range(1, 6) for j in range(min(4, d - 1) + 1)]
        self.assertEqual(pairs, expected)
        last = report.coefficient_checks[-1]
        self.assertEqual((last.matrix, last.closed_form, last.symmetric_sum), ("43/15", "43/15", "43/15"))
        self.assertEqual(len(report.notes), 1)

    def test_broken_engine_is_reported(self):
        with patch.dict(engines.ENGINES, {"closed": lambda spec: 0}):
            report = run_verification(2, 2)
        self.assertFalse(report.ok)
        self.assertIn("count:d=1,n=1", report.mismatches)
        self.assertEqual(len(report.mismatches), 6)

    def test_report_dict(self):
        payload = run_verification(2, 1).to_dict()
        self.assertEqual(payload["grid"][0], {"d": 1, "n": 0, "counts": {name: "1" for name in
                                                                         sorted(ANALYTIC_ENGINES + ("brute",))}})
        self.assertTrue(payload["ok"])

    def test_discrepancy_note_numbers(self):
        note = cubic_discrepancy_note(4)
        self.assertIn("published 16", note)
        self.assertIn("8/3", note)

    def test_invalid_bounds(self):
        with self.assertRaises(InvalidArgumentError):
            run_verification(0, 3)
        with self.assertRaises(InvalidArgumentError):
            run_verification(2, -1)

    @pytest.mark.slow
    def test_acceptance_grid(self):
        report = run_verification(10, 100)
        self.assertTrue(report.ok, report.mismatches)


class BenchmarkTests(unittest.TestCase):

    def test_records_and_digests(self):
        spec = WalkSpec(3, 5)
        records = run_benchmarks(spec, ["series", "closed", "poly"], reps=3)
        self.assertEqual([r.engine for r in records], ["closed", "poly", "series"])
        self.assertTrue(digests_agree(records))
        for record in records:
            with self.subTest(engine=record.engine):
                self.assertEqual(record.digest, "146")
                self.assertEqual(record.repetitions, 3)
                self.assertLessEqual(record.min_ns, record.median_ns)
                self.assertLessEqual(record.median_ns, record.max_ns)
                self.assertGreaterEqual(record.peak_memory_kb, 0)

    def test_brute_respects_limit(self):
        with self.assertRaises(LimitExceededError):
            benchmark_engine("brute", WalkSpec(5, 3), 1, BruteForceLimit(4, 12))
        record = benchmark_engine("brute", WalkSpec(5, 3), 1, BruteForceLimit(5, 3))
        self.assertEqual(record.digest, "180")

    def test_disagreeing_digests(self):
        records = [
            BenchRecord("closed", 2, 2, 1, 1, 1, 1, 0.0, "9"),
            BenchRecord("series", 2, 2, 1, 1, 1, 1, 0.0, "10"),
        ]
        self.assertFalse(digests_agree(records))
        self.assertTrue(digests_agree(records[:1]))

    def test_to_dict(self):
        record = benchmark_engine("parity", WalkSpec(2, 2), 2)
        payload = record.to_dict()
        self.assertEqual(payload["digest"], "9")
        self.assertEqual(set(payload), {"engine", "d", "n", "repetitions", "min_ns", "median_ns", "max_ns",
                                        "peak_memory_kb", "digest"})

    def test_reps_must_be_positive(self):
        with self.assertRaises(InvalidArgumentError):
            benchmark_engine("closed", WalkSpec(2, 2), 0)


if __name__ == "__main__":
    unittest.main()
