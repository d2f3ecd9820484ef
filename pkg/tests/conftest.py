from pathlib import Path

import pytest

from castnet.cast import parse_cast_file
from castnet.corpus import load_corpus

_CRITERION_NAMES = {
    "test_whole_play_frequency_reproduction": "whole-play frequency reproduction",
    "test_per_act_leaders": "per-act leaders",
    "test_kernel_calibration_sweep": "kernel calibration sweep",
    "test_oracle_equivalence_on_randomized_corpora": "oracle equivalence (50 randomized corpora)",
    "test_property_suite": "property suite",
    "test_cli_api_parity": "CLI/API parity",
}


def pytest_runtest_logreport(report):
    """One visible PASS/FAIL line per acceptance criterion."""
    if report.when != "call":
        return
    name = report.nodeid.rsplit("::", 1)[-1]
    if name in _CRITERION_NAMES and "test_acceptance" in report.nodeid:
        verdict = "PASS" if report.passed else "FAIL"
        print(f"\nACCEPTANCE {verdict}: {_CRITERION_NAMES[name]}")

REPO_ROOT = Path(__file__).resolve().parent.parent
HAMLET_DIR = REPO_ROOT / "data" / "hamlet"
HAMLET_CAST = REPO_ROOT / "data" / "hamlet.cast"


@pytest.fixture(scope="session")
def hamlet_corpus():
    return load_corpus(HAMLET_DIR)


@pytest.fixture(scope="session")
def hamlet_cast():
    return parse_cast_file(HAMLET_CAST.read_text(encoding="utf-8"))
