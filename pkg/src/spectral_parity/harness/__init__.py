"""Verification campaigns and their self-auditing reports."""

from spectral_parity.harness.batch import CampaignRunner
from spectral_parity.harness.fingerprint import Fingerprint, fingerprint, same_structure
from spectral_parity.harness.inequalities import verify_proof_grid, verify_proof_inequalities
from spectral_parity.harness.lemma23 import lemma23_campaign, verify_lemma23
from spectral_parity.harness.random_graphs import RandomGraphConfig, meets_hypotheses, random_graph
from spectral_parity.harness.report import CHECKS, HarnessReport, ReportRow, lookup_check
from spectral_parity.harness.rng import SplitMix64
from spectral_parity.harness.scan import ScanMode, scan_small
from spectral_parity.harness.sharpness import sharpness_probe
from spectral_parity.harness.theorem import theorem_check

__all__ = [
    "CHECKS",
    "CampaignRunner",
    "Fingerprint",
    "HarnessReport",
    "RandomGraphConfig",
    "ReportRow",
    "ScanMode",
    "SplitMix64",
    "fingerprint",
    "lemma23_campaign",
    "lookup_check",
    "meets_hypotheses",
    "random_graph",
    "same_structure",
    "scan_small",
    "sharpness_probe",
    "theorem_check",
    "verify_lemma23",
    "verify_proof_grid",
    "verify_proof_inequalities",
]
