"""Batch aggregation: consensus tables, rank tests, convergence curves.

Pure functions over completed run results. Rendering (plots) lives in the
reporting layer, not here; this module only produces tabular data and the
delimited text formats.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from typing import Sequence

from .evolution import RunResult
from .mapping import Chromosome


@dataclass(frozen=True)
class ConsensusTable:
    """Per-cipher-symbol frequency of gene values over a set of chromosomes.

    ``table[symbol]`` maps each observed gene value to its relative
    frequency; entries are ordered by descending frequency, then value.
    """

    symbols: tuple[str, ...]
    table: dict[str, dict[str, float]]

    def distribution(self, symbol: str) -> dict[str, float]:
        return self.table[symbol]

    def to_tsv(self) -> str:
        lines = []
        for symbol in self.symbols:
            for value, freq in self.table[symbol].items():
                lines.append(f"{symbol}\t{value}\t{freq!r}\n")
        return "".join(lines)


@dataclass(frozen=True)
class BatchComparison:
    """Two-sided Mann-Whitney comparison of two batches of final fitnesses."""

    statistic: float
    p_value: float
    n_a: int
    n_b: int
    method: str

    def to_json_dict(self) -> dict:
        return {
            "statistic": self.statistic,
            "p_value": self.p_value,
            "n_a": self.n_a,
            "n_b": self.n_b,
        }


@dataclass(frozen=True)
class ConvergenceRow:
    generation: int
    best_mean: float
    best_min: int
    best_max: int


def consensus(chromosomes: Sequence[Chromosome]) -> ConsensusTable:
    """Empirical gene-value distribution per cipher symbol.

    All chromosomes must share one cipher alphabet. Gene values are
    opaque strings, so multi-character and empty genes tally like any
    other value.
    """
    if not chromosomes:
        raise ValueError("consensus requires at least one chromosome")
    alphabet = chromosomes[0].alphabet
    if any(ch.alphabet != alphabet for ch in chromosomes):
        raise ValueError("chromosomes use mixed cipher alphabets")
    n = len(chromosomes)
    table = {}
    for i, symbol in enumerate(alphabet):
        counts = Counter(ch.genes[i] for ch in chromosomes)
        ordered = sorted(counts.items(), key=lambda item: (-item[1], item[0]))
        table[symbol] = {value: count / n for value, count in ordered}
    return ConsensusTable(symbols=alphabet, table=table)


EXACT_MAX_BATCH = 12


def compare_batches(
    final_fitnesses_a: Sequence[float], final_fitnesses_b: Sequence[float]
) -> BatchComparison:
    """Two-sided Mann-Whitney U test between two batches.

    The statistic is U for the first batch counted with midranks
    (R_a - n_a(n_a+1)/2). Batches of at most 12 each get the exact
    permutation distribution (ties handled by midranks); larger batches
    use the tie-corrected normal approximation with continuity correction.
    """
    if not final_fitnesses_a or not final_fitnesses_b:
        raise ValueError("both batches must be nonempty")
    n_a, n_b = len(final_fitnesses_a), len(final_fitnesses_b)
    pooled = list(final_fitnesses_a) + list(final_fitnesses_b)
    double_ranks = _doubled_midranks(pooled)
    # doubled U is integral even with .5 midranks
    u_doubled = sum(double_ranks[:n_a]) - n_a * (n_a + 1)
    u_a = u_doubled / 2

    if n_a <= EXACT_MAX_BATCH and n_b <= EXACT_MAX_BATCH:
        p = _exact_two_sided_p(double_ranks, n_a, u_doubled)
        method = "exact"
    else:
        p = _normal_two_sided_p(pooled, n_a, n_b, u_a)
        method = "normal"
    return BatchComparison(statistic=u_a, p_value=p, n_a=n_a, n_b=n_b, method=method)


def convergence_table(batch: Sequence[RunResult]) -> list[ConvergenceRow]:
    """Per-generation mean/min/max of best fitness across a batch of runs."""
    if not batch:
        raise ValueError("convergence table requires at least one run")
    lengths = {len(r.trace) for r in batch}
    if len(lengths) != 1:
        raise ValueError(f"runs have unequal generation counts: {sorted(lengths)}")
    rows = []
    for records in zip(*(r.trace for r in batch)):
        generations = {rec.generation for rec in records}
        if len(generations) != 1:
            raise ValueError("runs have mismatched generation numbering")
        bests = [rec.best for rec in records]
        rows.append(
            ConvergenceRow(
                generation=records[0].generation,
                best_mean=sum(bests) / len(bests),
                best_min=min(bests),
                best_max=max(bests),
            )
        )
    return rows


def convergence_csv(rows: Sequence[ConvergenceRow]) -> str:
    """CSV rendering with header generation,best_mean,best_min,best_max."""
    out = ["generation,best_mean,best_min,best_max\n"]
    for row in rows:
        out.append(f"{row.generation},{row.best_mean!r},{row.best_min},{row.best_max}\n")
    return "".join(out)


def _doubled_midranks(values: Sequence[float]) -> list[int]:
    """Midranks of ``values`` times two (integers, so tie math stays exact)."""
    order = sorted(range(len(values)), key=values.__getitem__)
    doubled = [0] * len(values)
    i = 0
    while i < len(order):
        j = i
        while j + 1 < len(order) and values[order[j + 1]] == values[order[i]]:
            j += 1
        # ranks i+1..j+1 share the midrank (i+j+2)/2; doubled: i+j+2
        for k in range(i, j + 1):
            doubled[order[k]] = i + j + 2
        i = j + 1
    return doubled


def _exact_two_sided_p(double_ranks: list[int], n_a: int, u_doubled_obs: int) -> float:
    """Exact permutation p-value by counting rank-subset sums.

    Enumerates, via subset-sum dynamic programming, how many of the
    C(n, n_a) assignments of the pooled midranks to batch A give a U at
    least as far from its null mean n_a*n_b/2 as the observed one.
    """
    n = len(double_ranks)
    n_b = n - n_a
    # dp[k] maps doubled rank sums of k-element subsets to their count
    dp: list[dict[int, int]] = [{} for _ in range(n_a + 1)]
    dp[0][0] = 1
    for r in double_ranks:
        for k in range(min(n_a, n), 0, -1):
            prev = dp[k - 1]
            if not prev:
                continue
            cur = dp[k]
            for s, c in prev.items():
                cur[s + r] = cur.get(s + r, 0) + c
    mean_doubled = n_a * n_b  # doubled U has null mean n_a*n_b
    dev_obs = abs(u_doubled_obs - mean_doubled)
    offset = n_a * (n_a + 1)  # doubled U = doubled rank sum - offset
    extreme = sum(
        c for s, c in dp[n_a].items() if abs(s - offset - mean_doubled) >= dev_obs
    )
    return extreme / math.comb(n, n_a)


def _normal_two_sided_p(pooled: Sequence[float], n_a: int, n_b: int, u_a: float) -> float:
    """Tie-corrected normal approximation with 0.5 continuity correction."""
    n = n_a + n_b
    tie_counts = Counter(pooled).values()
    tie_term = sum(t**3 - t for t in tie_counts) / (n * (n - 1))
    variance = n_a * n_b / 12 * ((n + 1) - tie_term)
    if variance <= 0:
        return 1.0
    mean = n_a * n_b / 2
    z = max(0.0, abs(u_a - mean) - 0.5) / math.sqrt(variance)
    return min(1.0, math.erfc(z / math.sqrt(2)))
