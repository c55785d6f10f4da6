"""Command-line front end.

Verbs: analyze, canonical-form, rf-check, rigid-search,
verify-realization, catalog.  Exit codes: 0 = analysis completed,
3 = at least one obstruction certificate was found (for batch sweeps),
1 = input or budget error, 2 = usage error (argparse).

Reports are a single dict rendered either as JSON (--json) or as text;
both carry identical verdicts.  A missing certificate is always
reported as "no certificate found" — it is never evidence that a code
has a closed-convex realization.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
import time
from concurrent.futures import ThreadPoolExecutor

from . import __version__
from .catalog import list_names, named_code
from .codes import (
    NeuralCode,
    code_to_json_obj,
    format_code,
    mask_to_neurons,
    parse_code,
)
from .containment import (
    alternating_condition,
    containment_graph,
    interval_condition,
    recognize_cycle,
    recognize_path,
    triplewise_condition,
)
from .errors import BudgetExceededError, CodeParseError
from .ideal import (
    CANONICAL_FORM_MAX_N,
    canonical_form,
    format_pseudo_monomial,
    rf_relationships,
)
from .rf_criterion import (
    ROW_DESCRIPTIONS,
    check_tuple,
    safe_codeword_additions,
    search_rf_obstruction,
)
from .rigidity import (
    SearchBudget,
    certificate_to_obj,
    cycle_criterion,
    replay_certificate,
    search_rigid_obstruction,
)

EXIT_OK = 0
EXIT_INPUT_ERROR = 1
EXIT_OBSTRUCTION = 3

RF_SEARCH_MAX_N = 16  # the 5-tuple grid has n^5 cells

REPORT_SCHEMA = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "title": "convexa analysis report",
    "type": "object",
    "required": [
        "tool",
        "version",
        "command",
        "code",
        "canonical_form",
        "rf_relationships",
        "containment_graph",
        "obstructions",
        "realization",
        "timing",
    ],
    "properties": {
        "tool": {"const": "convexa"},
        "version": {"type": "string"},
        "command": {"const": "analyze"},
        "code": {
            "type": "object",
            "required": ["n", "codewords"],
            "properties": {
                "n": {"type": "integer", "minimum": 0},
                "codewords": {
                    "type": "array",
                    "items": {"type": "array", "items": {"type": "integer"}},
                },
            },
        },
        "canonical_form": {
            "type": "object",
            "required": ["skipped", "elements"],
            "properties": {
                "skipped": {"type": "boolean"},
                "note": {"type": ["string", "null"]},
                "elements": {
                    "type": ["array", "null"],
                    "items": {"type": "string"},
                },
            },
        },
        "rf_relationships": {
            "type": ["array", "null"],
            "items": {
                "type": "object",
                "required": ["kind", "sigma", "tau"],
                "properties": {
                    "kind": {"enum": ["empty-intersection", "covering"]},
                    "sigma": {"type": "array", "items": {"type": "integer"}},
                    "tau": {"type": "array", "items": {"type": "integer"}},
                    "text": {"type": "string"},
                },
            },
        },
        "containment_graph": {
            "type": "object",
            "required": ["vertices", "edges", "components", "shape"],
            "properties": {
                "vertices": {"type": "integer"},
                "edges": {"type": "integer"},
                "components": {"type": "integer"},
                "shape": {"enum": ["path", "cycle", "other"]},
                "ordering": {
                    "type": ["array", "null"],
                    "items": {"type": "array", "items": {"type": "integer"}},
                },
                "triplewise_condition": {"type": ["boolean", "null"]},
                "interval_condition": {
                    "type": ["object", "null"],
                    "required": ["holds"],
                    "properties": {
                        "holds": {"type": "boolean"},
                        "violation": {
                            "type": ["object", "null"],
                            "properties": {
                                "neuron": {"type": "integer"},
                                "positions": {
                                    "type": "array",
                                    "items": {"type": "integer"},
                                },
                            },
                        },
                    },
                },
                "alternating_condition": {"type": ["boolean", "null"]},
            },
        },
        "obstructions": {
            "type": "object",
            "required": ["verdict", "cycle", "rigid_pair", "rf_tuples"],
            "properties": {
                "verdict": {
                    "enum": ["obstruction found", "no certificate found"]
                },
                "cycle": {"type": ["object", "null"]},
                "rigid_pair": {"type": ["object", "null"]},
                "rf_tuples": {"type": "array", "items": {"type": "object"}},
                "rf_search_note": {"type": ["string", "null"]},
                "replayed": {"type": "boolean"},
                "budget": {
                    "type": "object",
                    "required": ["exceeded"],
                    "properties": {
                        "exceeded": {"type": "boolean"},
                        "context": {"type": ["object", "null"]},
                    },
                },
            },
        },
        "realization": {"type": ["object", "null"]},
        "timing": {
            "type": "object",
            "required": ["total_s"],
            "additionalProperties": {"type": "number"},
        },
    },
}


def _labels(mask: int) -> list[int]:
    return list(mask_to_neurons(mask))


def _word_text(mask: int, n: int) -> str:
    labs = mask_to_neurons(mask)
    if not labs:
        return "{}"
    if n <= 9:
        return "".join(str(i) for i in labs)
    return "{" + ",".join(str(i) for i in labs) + "}"


def _relation_text(kind: str, sigma, tau, n: int) -> str:
    s = _word_text(sum(1 << (i - 1) for i in sigma), n) if sigma else "X"
    if kind == "empty-intersection":
        return f"common region of {s} is empty"
    t = " + ".join(_word_text(1 << (i - 1), n) for i in tau)
    return f"common region of {s} lies inside the union of {t}"


def _load_code(args) -> NeuralCode:
    if getattr(args, "name", None):
        return named_code(args.name)
    with open(args.file, encoding="utf-8") as fh:
        return parse_code(fh.read())


def _add_code_source(p: argparse.ArgumentParser):
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--name", help="catalog code name (see `catalog list`)")
    src.add_argument("--file", help="path to a code file (text or JSON)")


def _add_budget_flags(p: argparse.ArgumentParser):
    p.add_argument(
        "--budget-max-support",
        type=int,
        default=4,
        metavar="K",
        help="largest support size tried in the rigid search (default 4)",
    )
    p.add_argument(
        "--budget-candidates",
        type=int,
        default=20_000,
        metavar="N",
        help="cap on candidate supports in the rigid search",
    )
    p.add_argument(
        "--budget-pair-checks",
        type=int,
        default=2_000_000,
        metavar="N",
        help="cap on witness-pair checks in the rigid search",
    )
    p.add_argument(
        "--budget-feasibility",
        type=int,
        default=1_000_000,
        metavar="N",
        help="cap on exact feasibility calls for realization work",
    )


def _search_budget(args) -> SearchBudget:
    return SearchBudget(
        max_support=args.budget_max_support,
        max_candidates=args.budget_candidates,
        max_pair_checks=args.budget_pair_checks,
    )


def _containment_summary(code: NeuralCode) -> dict:
    nonempty = [w for w in code.sorted_masks() if w]
    g = containment_graph(nonempty)
    ordering = recognize_cycle(g)
    shape = "cycle" if ordering else None
    if ordering is None:
        ordering = recognize_path(g)
        shape = "path" if ordering else "other"
    out = {
        "vertices": len(g.vertices),
        "edges": len(g.edges),
        "components": len(g.connected_components()),
        "shape": shape,
        "ordering": None,
        "triplewise_condition": None,
        "interval_condition": None,
        "alternating_condition": None,
    }
    if ordering is not None:
        out["ordering"] = [_labels(v) for v in ordering.sequence]
        out["triplewise_condition"] = triplewise_condition(ordering)
        out["alternating_condition"] = alternating_condition(ordering)
        if shape == "path":
            violation = interval_condition(ordering, code.n)
            out["interval_condition"] = {
                "holds": violation is None,
                "violation": None
                if violation is None
                else {
                    "neuron": violation.neuron,
                    "positions": list(violation.positions),
                },
            }
    return out


def _realization_section(args, code: NeuralCode) -> dict | None:
    path = getattr(args, "realization", None)
    if not path:
        return None
    from .geometry import (
        BudgetCounter,
        nondegeneracy_check_closed,
        nondegeneracy_check_open,
        realization_from_json_obj,
        realized_code,
    )

    with open(path, encoding="utf-8") as fh:
        real = realization_from_json_obj(json.load(fh))
    if real.n != code.n:
        raise ValueError(
            f"realization has {real.n} bodies but the code has {code.n} neurons"
        )
    counter = BudgetCounter(args.budget_feasibility)
    observed = realized_code(real, candidates=code.sorted_masks(), counter=counter)
    missing = sorted(set(code.codewords) - set(observed.codewords))
    extra = sorted(set(observed.codewords) - set(code.codewords))
    section = {
        "file": path,
        "dim": real.dim,
        "mode": real.mode,
        "bodies": real.n,
        "match": not missing and not extra,
        "missing_codewords": [_labels(w) for w in missing],
        "extra_codewords": [_labels(w) for w in extra],
        "nondegeneracy": None,
        "feasibility_calls": counter.count,
    }
    if getattr(args, "nondegeneracy", False):
        check = (
            nondegeneracy_check_closed
            if real.mode == "closed"
            else nondegeneracy_check_open
        )
        section["nondegeneracy"] = check(real, counter=counter)
    if getattr(args, "svg", None):
        from .geometry import render_svg

        with open(args.svg, "w", encoding="utf-8") as fh:
            fh.write(render_svg(real))
        section["svg"] = args.svg
    return section


def build_analysis_report(code: NeuralCode, args) -> dict:
    t0 = time.perf_counter()
    timing: dict[str, float] = {}
    budget = _search_budget(args)

    def timed(label, fn):
        s = time.perf_counter()
        try:
            return fn()
        finally:
            timing[label] = round(time.perf_counter() - s, 6)

    def cf_task():
        if code.n > CANONICAL_FORM_MAX_N:
            return None
        return canonical_form(code)

    def rigid_task():
        try:
            return search_rigid_obstruction(code, budget), None
        except BudgetExceededError as exc:
            return None, exc

    def rf_task():
        if code.n > RF_SEARCH_MAX_N:
            return None
        return search_rf_obstruction(code)

    workers = int(os.environ.get("CONVEXA_THREADS", "1") or "1")
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            f_cf = pool.submit(lambda: timed("canonical_form_s", cf_task))
            f_rigid = pool.submit(lambda: timed("rigid_search_s", rigid_task))
            f_rf = pool.submit(lambda: timed("rf_search_s", rf_task))
            cf = f_cf.result()
            rigid_cert, rigid_budget_err = f_rigid.result()
            rf_certs = f_rf.result()
    else:
        cf = timed("canonical_form_s", cf_task)
        rigid_cert, rigid_budget_err = timed("rigid_search_s", rigid_task)
        rf_certs = timed("rf_search_s", rf_task)

    cyc = rigid_cert if rigid_cert is not None and rigid_cert.kind == "cycle" else (
        cycle_criterion(code)
    )
    pair = rigid_cert if rigid_cert is not None and rigid_cert.kind == "rigid-pair" else None

    replayed = True
    for cert in filter(None, [cyc, pair]):
        if not replay_certificate(code, cert):  # pragma: no cover - bug guard
            raise RuntimeError("certificate failed to replay")
    for cert in rf_certs or ():
        if not check_tuple(code, cert.tuple).passed:  # pragma: no cover
            raise RuntimeError("RF tuple certificate failed to replay")

    if cf is None:
        cf_section = {
            "skipped": True,
            "note": f"canonical form limited to n <= {CANONICAL_FORM_MAX_N}",
            "elements": None,
        }
        relationships = None
    else:
        cf_section = {
            "skipped": False,
            "note": None,
            "elements": [format_pseudo_monomial(pm) for pm in cf.elements],
        }
        relationships = [
            {
                "kind": rel.kind,
                "sigma": _labels(rel.sigma),
                "tau": _labels(rel.tau),
                "text": _relation_text(
                    rel.kind, _labels(rel.sigma), _labels(rel.tau), code.n
                ),
            }
            for rel in rf_relationships(cf)
        ]

    found_any = bool(cyc or pair or rf_certs)
    report = {
        "tool": "convexa",
        "version": __version__,
        "command": "analyze",
        "code": code_to_json_obj(code),
        "canonical_form": cf_section,
        "rf_relationships": relationships,
        "containment_graph": timed(
            "containment_s", lambda: _containment_summary(code)
        ),
        "obstructions": {
            "verdict": "obstruction found" if found_any else "no certificate found",
            "cycle": certificate_to_obj(cyc) if cyc else None,
            "rigid_pair": certificate_to_obj(pair) if pair else None,
            "rf_tuples": [certificate_to_obj(c) for c in (rf_certs or ())],
            "rf_search_note": None
            if rf_certs is not None
            else f"5-tuple grid skipped for n > {RF_SEARCH_MAX_N}",
            "replayed": replayed,
            "budget": {
                "exceeded": rigid_budget_err is not None,
                "context": getattr(rigid_budget_err, "context", None),
            },
        },
        "realization": timed(
            "realization_s", lambda: _realization_section(args, code)
        ),
        "timing": timing,
    }
    report["timing"]["total_s"] = round(time.perf_counter() - t0, 6)
    return report


def _render_analysis_text(report: dict) -> str:
    code = report["code"]
    n = code["n"]
    lines = [
        f"code: n={n}, {len(code['codewords'])} codewords",
    ]
    cfs = report["canonical_form"]
    if cfs["skipped"]:
        lines.append(f"canonical form: skipped ({cfs['note']})")
    else:
        lines.append(f"canonical form ({len(cfs['elements'])} elements):")
        lines.extend(f"  {el}" for el in cfs["elements"])
    if report["rf_relationships"]:
        lines.append("receptive-field relationships:")
        lines.extend(f"  {rel['text']}" for rel in report["rf_relationships"])
    g = report["containment_graph"]
    lines.append(
        f"containment graph: {g['vertices']} vertices, {g['edges']} edges, "
        f"{g['components']} component(s), shape={g['shape']}"
    )
    if g["ordering"]:

        def word(labs):
            return _word_text(sum(1 << (i - 1) for i in labs), n) if labs else "{}"

        lines.append("  ordering: " + " - ".join(word(w) for w in g["ordering"]))
        lines.append(f"  triplewise condition: {g['triplewise_condition']}")
        if g["interval_condition"] is not None:
            lines.append(f"  interval condition: {g['interval_condition']['holds']}")
        lines.append(f"  alternating condition: {g['alternating_condition']}")
    obs = report["obstructions"]
    lines.append(f"obstructions: {obs['verdict']}")
    if obs["cycle"]:
        lines.append("  cycle certificate: " + json.dumps(obs["cycle"]))
    if obs["rigid_pair"]:
        lines.append("  rigid-pair certificate: " + json.dumps(obs["rigid_pair"]))
    if obs["rf_tuples"]:
        tuples = ", ".join(str(tuple(c["tuple"])) for c in obs["rf_tuples"])
        lines.append(f"  RF 5-tuples: {tuples}")
    if obs["rf_search_note"]:
        lines.append(f"  note: {obs['rf_search_note']}")
    if obs["budget"]["exceeded"]:
        lines.append(f"  rigid search budget exceeded: {obs['budget']['context']}")
    real = report["realization"]
    if real is not None:
        lines.append(
            f"realization: {real['file']} (dim {real['dim']}, {real['mode']}, "
            f"{real['bodies']} bodies) match={real['match']}"
        )
        if real["missing_codewords"]:
            lines.append(f"  missing: {real['missing_codewords']}")
        if real["extra_codewords"]:
            lines.append(f"  extra: {real['extra_codewords']}")
        if real["nondegeneracy"]:
            lines.append(f"  nondegeneracy: {real['nondegeneracy']}")
    lines.append(f"elapsed: {report['timing']['total_s']}s")
    return "\n".join(lines)


def _emit(report: dict, as_json: bool, text: str):
    print(json.dumps(report, indent=2) if as_json else text)


def cmd_analyze(args) -> int:
    code = _load_code(args)
    report = build_analysis_report(code, args)
    _emit(report, args.json, _render_analysis_text(report))
    obs = report["obstructions"]
    if obs["verdict"] == "obstruction found":
        return EXIT_OBSTRUCTION
    if obs["budget"]["exceeded"]:
        return EXIT_INPUT_ERROR
    return EXIT_OK


def cmd_canonical_form(args) -> int:
    code = _load_code(args)
    if code.n > CANONICAL_FORM_MAX_N:
        print(
            f"error: canonical form limited to n <= {CANONICAL_FORM_MAX_N}",
            file=sys.stderr,
        )
        return EXIT_INPUT_ERROR
    cf = canonical_form(code)
    rels = rf_relationships(cf)
    report = {
        "tool": "convexa",
        "version": __version__,
        "command": "canonical-form",
        "code": code_to_json_obj(code),
        "elements": [format_pseudo_monomial(pm) for pm in cf.elements],
        "relationships": [
            {
                "kind": rel.kind,
                "sigma": _labels(rel.sigma),
                "tau": _labels(rel.tau),
                "text": _relation_text(
                    rel.kind, _labels(rel.sigma), _labels(rel.tau), code.n
                ),
            }
            for rel in rels
        ],
    }
    text = "\n".join(
        [f"canonical form ({len(report['elements'])} elements):"]
        + [f"  {el}" for el in report["elements"]]
        + ["receptive-field relationships:"]
        + [f"  {rel['text']}" for rel in report["relationships"]]
    )
    _emit(report, args.json, text)
    return EXIT_OK


def _parse_tuple(text: str) -> tuple[int, ...]:
    parts = [p for chunk in text.split(",") for p in chunk.split()]
    try:
        t = tuple(int(p) for p in parts)
    except ValueError as exc:
        raise CodeParseError(f"bad tuple {text!r}: {exc}") from exc
    if len(t) != 5:
        raise CodeParseError(f"expected five indices, got {len(t)}")
    return t


def cmd_rf_check(args) -> int:
    code = _load_code(args)
    report: dict = {
        "tool": "convexa",
        "version": __version__,
        "command": "rf-check",
        "code": code_to_json_obj(code),
        "tuple": None,
        "rows": None,
        "passed": None,
        "found_tuples": None,
        "safe_additions": None,
    }
    lines = []
    exit_code = EXIT_OK
    if args.tuple:
        t = _parse_tuple(args.tuple)
        result = check_tuple(code, t)
        report["tuple"] = list(t)
        report["rows"] = [
            {"index": i + 1, "description": ROW_DESCRIPTIONS[i], "holds": ok}
            for i, ok in enumerate(result.rows)
        ]
        report["passed"] = result.passed
        lines.append(f"tuple {t}: {'passes' if result.passed else 'fails'}")
        for row in report["rows"]:
            lines.append(f"  row {row['index']}: {row['holds']} ({row['description']})")
        if result.passed:
            exit_code = EXIT_OBSTRUCTION
            if args.additions:
                adds = safe_codeword_additions(code, t)
                words = [_labels(w) for w in sorted(adds)]
                report["safe_additions"] = words
                lines.append(
                    "safe codeword additions: "
                    + ", ".join(
                        _word_text(sum(1 << (i - 1) for i in w), code.n) or "{}"
                        for w in words
                    )
                )
        elif args.additions:
            lines.append("safe additions unavailable: the tuple does not pass")
    else:
        if code.n > RF_SEARCH_MAX_N:
            print(
                f"error: 5-tuple search limited to n <= {RF_SEARCH_MAX_N}",
                file=sys.stderr,
            )
            return EXIT_INPUT_ERROR
        certs = search_rf_obstruction(code)
        report["found_tuples"] = [list(c.tuple) for c in certs]
        if certs:
            exit_code = EXIT_OBSTRUCTION
            lines.append(f"{len(certs)} passing 5-tuple(s):")
            lines.extend(f"  {tuple(c.tuple)}" for c in certs)
        else:
            lines.append("no certificate found")
    _emit(report, args.json, "\n".join(lines))
    return exit_code


def cmd_rigid_search(args) -> int:
    code = _load_code(args)
    budget = _search_budget(args)
    report: dict = {
        "tool": "convexa",
        "version": __version__,
        "command": "rigid-search",
        "code": code_to_json_obj(code),
        "certificate": None,
        "verdict": "no certificate found",
        "budget": {"exceeded": False, "context": None},
    }
    exit_code = EXIT_OK
    try:
        cert = search_rigid_obstruction(code, budget)
    except BudgetExceededError as exc:
        report["budget"] = {"exceeded": True, "context": exc.context}
        _emit(report, args.json, f"budget exceeded: {exc.context}")
        return EXIT_INPUT_ERROR
    if cert is not None:
        if not replay_certificate(code, cert):  # pragma: no cover - bug guard
            raise RuntimeError("certificate failed to replay")
        report["certificate"] = certificate_to_obj(cert)
        report["verdict"] = "obstruction found"
        exit_code = EXIT_OBSTRUCTION
        text = f"obstruction found ({cert.kind}): " + json.dumps(
            report["certificate"]
        )
    else:
        text = "no certificate found"
    _emit(report, args.json, text)
    return exit_code


def cmd_verify_realization(args) -> int:
    code = _load_code(args)
    section = _realization_section(args, code)
    report = {
        "tool": "convexa",
        "version": __version__,
        "command": "verify-realization",
        "code": code_to_json_obj(code),
        "realization": section,
    }
    lines = [
        f"realization {section['file']}: dim {section['dim']}, {section['mode']}, "
        f"{section['bodies']} bodies",
        f"match: {section['match']}",
    ]
    if section["missing_codewords"]:
        lines.append(f"missing codewords: {section['missing_codewords']}")
    if section["extra_codewords"]:
        lines.append(f"extra codewords: {section['extra_codewords']}")
    if section["nondegeneracy"] is not None:
        lines.append(f"nondegeneracy: {section['nondegeneracy']}")
    _emit(report, args.json, "\n".join(lines))
    return EXIT_OK


def cmd_catalog(args) -> int:
    if args.action == "list":
        names = list_names()
        if args.json:
            print(json.dumps({"names": list(names)}, indent=2))
        else:
            print("\n".join(names))
        return EXIT_OK
    if args.action == "show":
        code = named_code(args.code_name)
        if args.json:
            print(json.dumps(code_to_json_obj(code), indent=2))
        else:
            print(format_code(code))
        return EXIT_OK
    # action == "realization": emit a built-in realization as JSON
    from .geometry import (
        build_sunflower_realization,
        realization_to_json_obj,
        theta_figure_realization,
    )

    name = args.code_name
    if name == "C_theta":
        real = theta_figure_realization()
    elif name.startswith("S") and name[1:].isdigit():
        real = build_sunflower_realization(int(name[1:]))
    else:
        print(
            f"error: no built-in realization for {name!r} "
            "(available: S2..S6, C_theta)",
            file=sys.stderr,
        )
        return EXIT_INPUT_ERROR
    print(json.dumps(realization_to_json_obj(real), indent=2))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="convexa",
        description="Combinatorial and geometric analysis of convex neural codes.",
    )
    parser.add_argument("--version", action="version", version=f"convexa {__version__}")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("analyze", help="run every analysis and print one report")
    _add_code_source(p)
    _add_budget_flags(p)
    p.add_argument("--json", action="store_true", help="emit the report as JSON")
    p.add_argument("--realization", metavar="PATH", help="realization JSON to verify")
    p.add_argument(
        "--nondegeneracy",
        action="store_true",
        help="with --realization: also run the nondegeneracy check",
    )
    p.add_argument("--svg", metavar="PATH", help="with --realization: write an SVG")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("canonical-form", help="canonical form of the neural ideal")
    _add_code_source(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_canonical_form)

    p = sub.add_parser("rf-check", help="receptive-field 5-tuple criterion")
    _add_code_source(p)
    p.add_argument("--tuple", metavar="I,J,K,L,M", help="check one specific tuple")
    p.add_argument(
        "--additions",
        action="store_true",
        help="with --tuple: list codeword additions that keep the tuple passing",
    )
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_rf_check)

    p = sub.add_parser("rigid-search", help="search for a rigid-structure obstruction")
    _add_code_source(p)
    _add_budget_flags(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_rigid_search)

    p = sub.add_parser(
        "verify-realization", help="compare a realization's code against a given code"
    )
    _add_code_source(p)
    _add_budget_flags(p)
    p.add_argument("--realization", metavar="PATH", required=True)
    p.add_argument("--nondegeneracy", action="store_true")
    p.add_argument("--svg", metavar="PATH", help="write a 2-D rendering")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify_realization)

    p = sub.add_parser("catalog", help="list or show built-in codes")
    p.add_argument("action", choices=["list", "show", "realization"])
    p.add_argument("code_name", nargs="?", help="code name for show/realization")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_catalog)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.verb == "catalog" and args.action in ("show", "realization"):
        if not args.code_name:
            parser.error(f"catalog {args.action} requires a code name")
    try:
        return args.func(args)
    except (CodeParseError, OSError, ValueError, KeyError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except BudgetExceededError as exc:
        print(f"error: budget exceeded: {exc} {exc.context}", file=sys.stderr)
        return EXIT_INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
