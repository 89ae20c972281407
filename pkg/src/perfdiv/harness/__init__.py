"""Enumeration, theorem campaigns, shrinking and the command-line interface."""

from .campaign import THEOREMS, CampaignReport, TheoremSpec, get_theorem, run_campaign
from .enumerate import enumerate_graphs, enumerate_up_to, random_graphs
from .shrink import shrink_counterexample

__all__ = [
    "THEOREMS",
    "CampaignReport",
    "TheoremSpec",
    "enumerate_graphs",
    "enumerate_up_to",
    "get_theorem",
    "random_graphs",
    "run_campaign",
    "shrink_counterexample",
]
