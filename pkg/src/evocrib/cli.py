"""Command-line interface: evolve / compare / stats subcommands.

``evolve`` orchestrates a full experiment batch and writes its reports
(convergence.csv, runs.json, consensus.tsv, stats.json, matches.tsv and a
convergence figure) into an output directory. ``compare`` rank-tests final
fitnesses of two saved batches. ``stats`` prints corpus and crib counts.

Exit codes: 0 success, 2 missing/unreadable file, 3 malformed input,
4 invalid parameters. Nothing is written before all inputs validate.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path

from . import stats as statsmod
from .corpus import CipherCorpus, corpus_stats, load_corpus
from .crib import Crib, RewriteRule, expand_crib, load_crib
from .errors import InvalidParamsError, MalformedInputError
from .evolution import EvolutionParams, RunResult, run_batch
from .fitness import MatchReport
from .mapping import Chromosome, GenePolicy, format_chromosome

CALENDAR_EXPECTED = {"tokens": 290, "types": 264, "type characters": 2045, "alphabet size": 19}


@dataclass(frozen=True)
class ExperimentConfig:
    """Everything one ``evolve`` invocation needs."""

    cipher_path: str
    crib_path: str
    rewrites: tuple[RewriteRule, ...]
    params: EvolutionParams
    out_dir: str
    formats: tuple[str, ...] = ("csv", "json", "tsv", "png")
    parallel_runs: int = 1
    verbose: bool = False

    def __post_init__(self):
        if not self.cipher_path or not self.crib_path:
            raise InvalidParamsError("cipher and crib paths must be nonempty")
        if self.parallel_runs < 1:
            raise InvalidParamsError("parallel_runs must be at least 1")


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except FileNotFoundError as exc:
        print(f"error: missing file: {exc.filename or exc}", file=sys.stderr)
        return 2
    except IsADirectoryError as exc:
        print(f"error: not a file: {exc.filename}", file=sys.stderr)
        return 2
    except MalformedInputError as exc:
        print(f"error: malformed input: {exc}", file=sys.stderr)
        return 3
    except json.JSONDecodeError as exc:
        print(f"error: malformed JSON: {exc}", file=sys.stderr)
        return 3
    except InvalidParamsError as exc:
        print(f"error: invalid parameters: {exc}", file=sys.stderr)
        return 4


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="evocrib",
        description="Evolve substitution alphabets mapping a cipher corpus onto a crib wordlist.",
    )
    sub = parser.add_subparsers(required=True)

    ev = sub.add_parser("evolve", help="run an experiment batch and write reports")
    ev.add_argument("--config", help="flat key=value file; command-line flags override it")
    ev.add_argument("--cipher", help="cipher token file, one token per line")
    ev.add_argument("--crib", help="crib wordlist file, one name per line")
    ev.add_argument("--rewrite", action="append", metavar="SUFFIX=REPLACEMENT",
                    help="crib suffix rewrite, repeatable")
    ev.add_argument("--reverse", action="store_true", default=None,
                    help="reverse each cipher token before decoding")
    ev.add_argument("--population", type=int, help="population size (default 5000)")
    ev.add_argument("--elite", type=int, help="elite size (default 5)")
    ev.add_argument("--mutation-rate", type=float, help="per-gene mutation probability (default 0.0005)")
    ev.add_argument("--generations", type=int, help="generations per run (default 200)")
    ev.add_argument("--runs", type=int, help="independent runs (default 10)")
    ev.add_argument("--seed", type=int, help="master seed; omitted = time-derived, recorded in runs.json")
    ev.add_argument("--gene-max-len", type=int, help="maximum gene length (default 1)")
    ev.add_argument("--length-weights", metavar="L:W,L:W,...",
                    help="gene length distribution, e.g. 0:0.1,1:0.8,2:0.1")
    ev.add_argument("--out", help="output directory (default evocrib-out)")
    ev.add_argument("--parallel-runs", type=int, help="worker processes for the batch (default 1)")
    ev.add_argument("--no-figures", action="store_true", default=None,
                    help="skip the convergence figure")
    ev.add_argument("--verbose", action="store_true", default=None,
                    help="log one line per generation")
    ev.set_defaults(func=_cmd_evolve)

    cp = sub.add_parser("compare", help="rank-test final fitnesses of two runs.json files")
    cp.add_argument("runs_json_a")
    cp.add_argument("runs_json_b")
    cp.set_defaults(func=_cmd_compare)

    st = sub.add_parser("stats", help="print corpus (and crib) statistics")
    st.add_argument("--cipher", required=True)
    st.add_argument("--crib")
    st.add_argument("--rewrite", action="append", metavar="SUFFIX=REPLACEMENT")
    st.add_argument("--expect-calendar", action="store_true",
                    help="check counts against the 290/264/2045/19 calendar reference")
    st.set_defaults(func=_cmd_stats)
    return parser


# ---------------------------------------------------------------- evolve


def _cmd_evolve(args) -> int:
    config = _merge_config(args)
    corpus, crib, base_crib = _load_inputs(config)

    out = Path(config.out_dir)
    out.mkdir(parents=True, exist_ok=True)

    if config.verbose:
        def progress(generation, best, mean):
            print(f"generation {generation}: best {best} mean {mean:.2f}", file=sys.stderr)
    else:
        progress = None

    results = run_batch(config.params, corpus, crib,
                        workers=config.parallel_runs, progress=progress)
    for result in results:
        print(f"run seed {result.seed_used}: best fitness {result.best_fitness}",
              file=sys.stderr)

    _write_reports(config, corpus, crib, base_crib, results, out)
    return 0


def _merge_config(args) -> ExperimentConfig:
    file_values: dict[str, object] = {}
    rewrites_from_file: list[str] = []
    if args.config:
        text = Path(args.config).read_text(encoding="utf-8")
        for line_no, raw in enumerate(text.split("\n"), start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise MalformedInputError(
                    f"{args.config}:{line_no}: expected key=value, got {line!r}", line_no
                )
            key, value = line.split("=", 1)
            key = key.strip().replace("-", "_")
            value = value.strip()
            if key == "rewrite":
                rewrites_from_file.append(value)
            else:
                file_values[key] = value

    def pick(flag, key, caster, default):
        if flag is not None:
            return flag
        if key in file_values:
            try:
                return caster(file_values[key])
            except (TypeError, ValueError) as exc:
                raise InvalidParamsError(f"config key {key}: {exc}") from exc
        return default

    cipher = pick(args.cipher, "cipher", str, None)
    crib = pick(args.crib, "crib", str, None)
    if not cipher or not crib:
        raise InvalidParamsError("--cipher and --crib are required (flag or config)")

    rewrites = tuple(
        RewriteRule.parse(r) for r in (args.rewrite if args.rewrite is not None else rewrites_from_file)
    )
    seed = pick(args.seed, "seed", int, None)
    if seed is None:
        seed = time.time_ns() % 2**32
    g_max = pick(args.gene_max_len, "gene_max_len", int, 1)
    weights_spec = pick(args.length_weights, "length_weights", str, None)
    try:
        policy = GenePolicy(
            g_max=g_max,
            length_weights=_parse_length_weights(weights_spec) if weights_spec else None,
        )
        params = EvolutionParams(
            population_size=pick(args.population, "population", int, 5000),
            elite_size=pick(args.elite, "elite", int, 5),
            mutation_rate=pick(args.mutation_rate, "mutation_rate", float, 0.0005),
            generations=pick(args.generations, "generations", int, 200),
            runs=pick(args.runs, "runs", int, 10),
            seed=seed,
            gene_policy=policy,
            reverse=pick(args.reverse, "reverse", _parse_bool, False),
        )
    except ValueError as exc:
        raise InvalidParamsError(str(exc)) from exc

    figures = not args.no_figures if args.no_figures is not None else _parse_bool(
        str(file_values.get("figures", "true"))
    )
    formats = ("csv", "json", "tsv", "png") if figures else ("csv", "json", "tsv")
    return ExperimentConfig(
        cipher_path=cipher,
        crib_path=crib,
        rewrites=rewrites,
        params=params,
        out_dir=pick(args.out, "out", str, "evocrib-out"),
        formats=formats,
        parallel_runs=pick(args.parallel_runs, "parallel_runs", int, 1),
        verbose=bool(args.verbose),
    )


def _parse_bool(text: str) -> bool:
    lowered = text.strip().lower()
    if lowered in ("true", "1", "yes", "on"):
        return True
    if lowered in ("false", "0", "no", "off"):
        return False
    raise ValueError(f"expected a boolean, got {text!r}")


def _parse_length_weights(spec: str) -> dict[int, float]:
    weights = {}
    for part in spec.split(","):
        if ":" not in part:
            raise InvalidParamsError(f"length weight {part!r} is not of the form LENGTH:WEIGHT")
        length, weight = part.split(":", 1)
        try:
            weights[int(length)] = float(weight)
        except ValueError as exc:
            raise InvalidParamsError(f"length weight {part!r}: {exc}") from exc
    return weights


def _load_inputs(config: ExperimentConfig) -> tuple[CipherCorpus, Crib, Crib]:
    corpus = load_corpus(Path(config.cipher_path).read_text(encoding="utf-8"))
    base_crib = load_crib(Path(config.crib_path).read_text(encoding="utf-8"))
    crib = expand_crib(base_crib, config.rewrites) if config.rewrites else base_crib
    if not corpus.tokens:
        raise InvalidParamsError(f"cipher file {config.cipher_path} has no tokens")
    if not crib.names:
        raise InvalidParamsError(f"crib file {config.crib_path} has no names")
    return corpus, crib, base_crib


def _write_reports(
    config: ExperimentConfig,
    corpus: CipherCorpus,
    crib: Crib,
    base_crib: Crib,
    results: list[RunResult],
    out: Path,
) -> None:
    rows = statsmod.convergence_table(results)
    _write_text(out / "convergence.csv", statsmod.convergence_csv(rows))

    table = statsmod.consensus([r.final_elite[0].chromosome for r in results])
    _write_text(out / "consensus.tsv", table.to_tsv())

    _write_text(out / "runs.json", serialize_runs(config, results))
    _write_text(out / "stats.json", _stats_json(config, corpus, crib, base_crib))

    best = max(results, key=lambda r: r.best_fitness)
    _write_text(out / "matches.tsv", best.best_report.to_tsv())

    if "png" in config.formats:
        from .figures import render_convergence

        render_convergence(results, rows, out / "convergence.png",
                           max_fitness=corpus.total_type_chars)


def _write_text(path: Path, text: str) -> None:
    path.write_bytes(text.encode("utf-8"))


def serialize_runs(config: ExperimentConfig, results: list[RunResult]) -> str:
    """Canonical runs.json text: sorted keys, two-space indent, one trailing
    newline. Reserializing the parsed document reproduces it byte for byte."""
    doc = {
        "params": _params_dict(config),
        "runs": [_run_dict(r) for r in results],
    }
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def _params_dict(config: ExperimentConfig) -> dict:
    params = config.params
    return {
        "cipher": config.cipher_path,
        "crib": config.crib_path,
        "rewrites": [f"{r.suffix}={r.replacement}" for r in config.rewrites],
        "reverse": params.reverse,
        "population_size": params.population_size,
        "elite_size": params.elite_size,
        "mutation_rate": params.mutation_rate,
        "generations": params.generations,
        "runs": params.runs,
        "seed": params.seed,
        "gene_max_len": params.gene_policy.g_max,
        "length_weights": {str(k): v for k, v in params.gene_policy.length_weights},
    }


def _run_dict(result: RunResult) -> dict:
    return {
        "seed_used": result.seed_used,
        "trace": [
            {"generation": rec.generation, "best": rec.best, "mean": rec.mean}
            for rec in result.trace
        ],
        "final_elite": [
            {"chromosome": format_chromosome(sc.chromosome), "fitness": sc.fitness}
            for sc in result.final_elite
        ],
        "best_report": _report_dict(result.best_report),
    }


def _report_dict(report: MatchReport) -> dict:
    return {
        "fitness": report.fitness,
        "matched_types": report.matched_type_count,
        "distinct_transcriptions": report.distinct_transcription_count,
        "pairs": [
            {"cipher_type": w, "transcription": t} for w, t in report.pairs
        ],
    }


def _stats_json(config: ExperimentConfig, corpus: CipherCorpus, crib: Crib, base_crib: Crib) -> str:
    report = corpus_stats(corpus)
    doc = {
        "cipher": {
            "path": config.cipher_path,
            "tokens": report.token_count,
            "types": report.type_count,
            "type_characters": report.total_type_chars,
            "alphabet_size": report.alphabet_size,
            "alphabet": "".join(report.alphabet),
        },
        "crib": {
            "path": config.crib_path,
            "names": len(crib.names),
            "names_before_expansion": len(base_crib.names),
            "alphabet_size": len(crib.alphabet),
            "alphabet": "".join(crib.alphabet),
            "rewrites": [f"{r.suffix}={r.replacement}" for r in config.rewrites],
        },
    }
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


# ---------------------------------------------------------------- compare


def _cmd_compare(args) -> int:
    batch_a = _final_fitnesses(Path(args.runs_json_a))
    batch_b = _final_fitnesses(Path(args.runs_json_b))
    comparison = statsmod.compare_batches(batch_a, batch_b)
    print(json.dumps(comparison.to_json_dict(), sort_keys=True))
    return 0


def _final_fitnesses(path: Path) -> list[int]:
    doc = json.loads(path.read_text(encoding="utf-8"))
    try:
        runs = doc["runs"]
        fitnesses = [r["final_elite"][0]["fitness"] for r in runs]
    except (KeyError, IndexError, TypeError) as exc:
        raise MalformedInputError(f"{path}: not a runs.json document ({exc!r})") from exc
    if not fitnesses:
        raise MalformedInputError(f"{path}: contains no runs")
    return fitnesses


# ---------------------------------------------------------------- stats


def _cmd_stats(args) -> int:
    corpus = load_corpus(Path(args.cipher).read_text(encoding="utf-8"))
    report = corpus_stats(corpus)
    print(f"cipher tokens: {report.token_count}")
    print(f"cipher types: {report.type_count}")
    print(f"cipher type characters: {report.total_type_chars}")
    print(f"cipher alphabet size: {report.alphabet_size}")
    print(f"cipher alphabet: {''.join(report.alphabet)}")

    if args.expect_calendar:
        actual = {
            "tokens": report.token_count,
            "types": report.type_count,
            "type characters": report.total_type_chars,
            "alphabet size": report.alphabet_size,
        }
        for key, expected in CALENDAR_EXPECTED.items():
            verdict = "OK" if actual[key] == expected else "MISMATCH"
            print(f"calendar check: {key} {actual[key]} expected {expected} {verdict}")

    if args.crib:
        base = load_crib(Path(args.crib).read_text(encoding="utf-8"))
        rules = tuple(RewriteRule.parse(r) for r in (args.rewrite or []))
        if rules:
            expanded = expand_crib(base, rules)
            print(f"crib names: {len(base.names)} (before expansion)")
            print(f"crib names: {len(expanded.names)} (after expansion)")
            print(f"crib alphabet size: {len(expanded.alphabet)}")
            print(f"crib alphabet: {''.join(expanded.alphabet)}")
        else:
            print(f"crib names: {len(base.names)}")
            print(f"crib alphabet size: {len(base.alphabet)}")
            print(f"crib alphabet: {''.join(base.alphabet)}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
