"""Experiments package.
- Census of intersection-closed and UD-unique set systems
- Distances between values on random games
- Sample sizing and rank / histogram summaries
"""

from .census import CensusRow, census_exhaustive, census_sampled, symmetric_unique_family
from .differences import DifferenceReport, SystemResult, difference_experiment
from .sampling import SamplePlan, ic_systems, plan_sample_size, sample_size
from .summary import HistogramBin, RankRow, RankTable, histogram, rank_frequency, summarize

__all__ = [
    "CensusRow",
    "DifferenceReport",
    "HistogramBin",
    "RankRow",
    "RankTable",
    "SamplePlan",
    "SystemResult",
    "census_exhaustive",
    "census_sampled",
    "difference_experiment",
    "histogram",
    "ic_systems",
    "plan_sample_size",
    "rank_frequency",
    "sample_size",
    "summarize",
    "symmetric_unique_family",
]
