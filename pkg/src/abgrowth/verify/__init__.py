"""Executable scenarios for the growth results, with JSON/CSV reports."""
from .intervals import IntervalSet, default_log_R, geometric_intervals
from .report import ERROR, FAIL, INAPPLICABLE, PASS, Comparison, Report, write_report
from .scenarios import (KINDS, ConfigError, HypothesisNotMet, Scenario, lemma_interval_measure,
                        lemma_logderiv_check, lemma_mp_bound_check, prop_order_algebra_suite,
                        prop_type_algebra_suite, run_scenario, run_theorem_scenario,
                        scenario_from_dict, wiman_valiron_scenario, zero_bound_property)
from .suite import (Suite, SuiteResult, load_default_suite, load_suite, run_suite,
                    suite_from_dict)

__all__ = [
    "IntervalSet", "default_log_R", "geometric_intervals", "PASS", "FAIL", "INAPPLICABLE",
    "ERROR", "Comparison", "Report", "write_report", "KINDS", "ConfigError", "HypothesisNotMet",
    "Scenario", "lemma_interval_measure", "lemma_logderiv_check", "lemma_mp_bound_check",
    "prop_order_algebra_suite", "prop_type_algebra_suite", "run_scenario",
    "run_theorem_scenario", "scenario_from_dict", "wiman_valiron_scenario",
    "zero_bound_property", "Suite", "SuiteResult", "load_default_suite", "load_suite",
    "run_suite", "suite_from_dict",
]
