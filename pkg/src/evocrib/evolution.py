"""Generational loop: roulette selection, elitism, discrete crossover, mutation.

Each run owns two seeded Mersenne Twister streams derived from its integer
seed: one for population initialization and one for the per-generation
selection/crossover/mutation sequence. Fitness evaluation consumes no
randomness, so a generation may be scored in parallel without changing the
trace. Runs within a batch use consecutive seeds and are fully independent,
which is what makes ``parallel`` batch execution bit-identical to
sequential execution.
"""

from __future__ import annotations

import random
from bisect import bisect_right
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from itertools import accumulate
from typing import Callable, NamedTuple, Sequence

from .corpus import CipherCorpus, reverse_corpus
from .crib import Crib
from .errors import InvalidParamsError
from .fitness import MatchReport, evaluate, match_report
from .mapping import Chromosome, GenePolicy, discrete_crossover, mutate, random_chromosome


class ScoredChromosome(NamedTuple):
    chromosome: Chromosome
    fitness: int


@dataclass(frozen=True)
class GenerationRecord:
    generation: int
    best: int
    mean: float


RunTrace = tuple[GenerationRecord, ...]

ProgressCallback = Callable[[int, int, float], None]


@dataclass(frozen=True)
class EvolutionParams:
    """Knobs of one experiment batch.

    Defaults reproduce the reference protocol: population 5000, elite 5,
    per-gene mutation probability 0.0005, 200 generations, 10 runs.
    """

    population_size: int = 5000
    elite_size: int = 5
    mutation_rate: float = 0.0005
    generations: int = 200
    runs: int = 10
    seed: int = 0
    gene_policy: GenePolicy = field(default_factory=GenePolicy)
    reverse: bool = False

    def __post_init__(self):
        if self.population_size < 1:
            raise InvalidParamsError("population_size must be positive")
        if not 0 <= self.elite_size < self.population_size:
            raise InvalidParamsError("elite_size must satisfy 0 <= elite < population")
        if not 0 <= self.mutation_rate <= 1:
            raise InvalidParamsError("mutation_rate must lie in [0, 1]")
        if self.generations < 1:
            raise InvalidParamsError("generations must be at least 1")
        if self.runs < 1:
            raise InvalidParamsError("runs must be at least 1")


@dataclass(frozen=True)
class RunResult:
    """Trace and final elite of one seeded run."""

    trace: RunTrace
    final_elite: tuple[ScoredChromosome, ...]
    seed_used: int
    best_report: MatchReport

    @property
    def best_fitness(self) -> int:
        return self.final_elite[0].fitness


def roulette_select(
    population: Sequence[ScoredChromosome], rng: random.Random
) -> Chromosome:
    """Fitness-proportionate ("roulette wheel") draw of one individual.

    Individual i is chosen with probability fitness_i / sum(fitness); when
    every fitness is zero the draw is uniform. Consumes exactly one
    ``rng.random()``.
    """
    if not population:
        raise ValueError("cannot select from an empty population")
    fitnesses = [sc.fitness for sc in population]
    if min(fitnesses) < 0:
        raise ValueError("roulette selection requires non-negative fitnesses")
    wheel = list(accumulate(fitnesses))
    return population[_spin(wheel, rng)].chromosome


def _spin(wheel: list[int], rng: random.Random) -> int:
    """Index draw from a cumulative-fitness wheel; uniform if all zero."""
    total = wheel[-1]
    n = len(wheel)
    if total == 0:
        return min(int(rng.random() * n), n - 1)
    return min(bisect_right(wheel, rng.random() * total), n - 1)


def step_generation(
    population: Sequence[ScoredChromosome],
    params: EvolutionParams,
    corpus: CipherCorpus,
    crib: Crib,
    rng: random.Random,
) -> list[ScoredChromosome]:
    """Produce and score the next generation.

    The ``elite_size`` fittest individuals (ties broken by position) are
    copied unchanged; every other slot is filled by a child of two roulette
    draws, recombined by discrete crossover and then mutated. Elites stay
    eligible as parents.
    """
    ranked = sorted(population, key=lambda sc: -sc.fitness)
    elite = ranked[: params.elite_size]
    wheel = list(accumulate(sc.fitness for sc in population))
    policy = params.gene_policy
    a_crib = crib.alphabet
    children = []
    for _ in range(len(population) - params.elite_size):
        p1 = population[_spin(wheel, rng)].chromosome
        p2 = population[_spin(wheel, rng)].chromosome
        child = mutate(discrete_crossover(p1, p2, rng), params.mutation_rate, rng, policy, a_crib)
        children.append(ScoredChromosome(child, evaluate(child, corpus, crib)))
    return elite + children


def run(
    params: EvolutionParams,
    corpus: CipherCorpus,
    crib: Crib,
    progress: ProgressCallback | None = None,
) -> RunResult:
    """Execute one seeded run of ``params.generations`` generational steps.

    When ``params.reverse`` is set the corpus token characters are
    reversed before any evaluation. The returned trace has one record per
    generation; elitism makes its best-fitness sequence non-decreasing.
    """
    if params.reverse:
        corpus = reverse_corpus(corpus)
    init_rng = random.Random(f"{params.seed}:init")
    evo_rng = random.Random(f"{params.seed}:evolve")

    population = []
    for _ in range(params.population_size):
        ch = random_chromosome(init_rng, params.gene_policy, corpus.alphabet, crib.alphabet)
        population.append(ScoredChromosome(ch, evaluate(ch, corpus, crib)))

    records = []
    for generation in range(1, params.generations + 1):
        population = step_generation(population, params, corpus, crib, evo_rng)
        best = max(sc.fitness for sc in population)
        mean = sum(sc.fitness for sc in population) / len(population)
        records.append(GenerationRecord(generation, best, mean))
        if progress is not None:
            progress(generation, best, mean)

    elite = tuple(sorted(population, key=lambda sc: -sc.fitness)[: params.elite_size])
    return RunResult(
        trace=tuple(records),
        final_elite=elite,
        seed_used=params.seed,
        best_report=match_report(elite[0].chromosome, corpus, crib),
    )


def run_batch(
    params: EvolutionParams,
    corpus: CipherCorpus,
    crib: Crib,
    workers: int = 1,
    progress: ProgressCallback | None = None,
) -> list[RunResult]:
    """Run ``params.runs`` independent runs seeded seed, seed+1, ...

    ``workers`` > 1 distributes runs over processes; results are collected
    in seed order and are identical to a sequential batch. ``progress`` is
    only honored sequentially (worker processes do not call back).
    """
    per_run = [replace(params, seed=params.seed + i) for i in range(params.runs)]
    if workers <= 1:
        return [run(p, corpus, crib, progress) for p in per_run]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_run_job, [(p, corpus, crib) for p in per_run]))


def _run_job(job: tuple[EvolutionParams, CipherCorpus, Crib]) -> RunResult:
    params, corpus, crib = job
    return run(params, corpus, crib)
