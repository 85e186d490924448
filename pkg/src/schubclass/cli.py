"""Command-line front end.

Exit codes: 0 success, 2 user error, 3 internal inconsistency, 4 resource cap.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, fields

from . import bruhat, weyl
from .bruhat import interval, is_boolean_interval
from .cartan import build_root_system
from .classify import classify_full, construct_prescribed, count_closed_orbits, is_horospherical, \
    is_nonsingular_horospherical
from .errors import CapExceeded, InternalInconsistency, ParseError, SchubertError, UserError
from .lattice import beta_sequence, character_lattice, kernel_report
from .weyl import enumerate_group, left_descents, parse_element, parse_indices, sort_key, support

SCHEMA = 1
EXIT_USER, EXIT_INTERNAL, EXIT_CAP = 2, 3, 4

FLAGS = ("is_toric", "is_spherical", "is_horospherical", "is_nearly_toric", "is_doubly_spherical",
         "is_simple_variety", "is_wonderful", "is_nonsingular_horospherical")
FLAG_ALIASES = {f[3:]: f for f in FLAGS} | {f: f for f in FLAGS} | {"simple": "is_simple_variety"}


@dataclass(frozen=True)
class Config:
    enumeration_cap: int = weyl.DEFAULT_ENUMERATION_CAP
    interval_cap: int = bruhat.DEFAULT_INTERVAL_CAP
    boolean_rank_cap: int = bruhat.DEFAULT_BOOLEAN_RANK_CAP
    oracle_length_cap: int = bruhat.DEFAULT_ORACLE_LENGTH_CAP
    output_format: str = "json"
    workers: int = 1

    def __post_init__(self):
        for f in fields(self):
            value = getattr(self, f.name)
            if f.type == "int" and (not isinstance(value, int) or value <= 0):
                raise UserError(f"config value {f.name} must be a positive integer")
        if self.output_format not in ("json", "csv"):
            raise UserError("output_format must be json or csv")


def read_config_file(path: str) -> dict:
    """``key = value`` lines; ``#`` starts a comment."""
    known = {f.name: f.type for f in fields(Config)}
    out = {}
    try:
        with open(path, encoding="utf-8") as fh:
            lines = fh.readlines()
    except OSError as exc:
        raise UserError(f"cannot read config file: {exc}") from None
    for n, line in enumerate(lines, 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        key, value = key.strip(), value.strip().strip('"').strip("'")
        if not sep or key not in known:
            raise ParseError(f"{path}:{n}: unrecognised config line")
        if known[key] == "int":
            try:
                out[key] = int(value.replace("_", ""))
            except ValueError:
                raise ParseError(f"{path}:{n}: {key} needs an integer") from None
        else:
            out[key] = value
    return out


def build_config(args) -> Config:
    values = {}
    if args.config:
        values.update(read_config_file(args.config))
    for f in fields(Config):
        v = getattr(args, f.name, None)
        if v is not None:
            values[f.name] = v
    return Config(**values)


def parse_levi(rs, text):
    if text is None:
        return None
    return rs.check_levi(parse_indices(text))


def emit(obj: dict, out):
    out.write(json.dumps({"schema": SCHEMA, **obj}) + "\n")


def cmd_classify(args, cfg, out):
    rs = build_root_system(args.type)
    w = parse_element(rs, args.word)
    result = classify_full(w, parse_levi(rs, args.levi), cap=cfg.interval_cap)
    emit(result.to_json(), out)


def cmd_closed_orbits(args, cfg, out):
    rs = build_root_system(args.type)
    w = parse_element(rs, args.word)
    J = parse_levi(rs, args.levi)
    if J is None:
        J = left_descents(w)
    out.write(f"{count_closed_orbits(w, J, cap=cfg.interval_cap)}\n")


def cmd_kernel(args, cfg, out):
    rs = build_root_system(args.type)
    word = parse_element(rs, args.word).word if args.word.strip().startswith("w0") \
        else tuple(parse_indices(args.word))
    betas = beta_sequence(rs, word)
    report = kernel_report(character_lattice(rs, args.isogeny), betas)
    emit({"type": rs.name, "word": list(word), "isogeny": character_lattice(rs, args.isogeny).isogeny.value,
          "betas": [list(b) for b in betas], **report.to_json()}, out)


def cmd_construct(args, cfg, out):
    rs = build_root_system(args.type)
    J = parse_levi(rs, args.levi)
    w = construct_prescribed(rs, J)
    emit({"type": rs.name, "levi": sorted(J), "word": " ".join(map(str, w.word)), "w": list(w.word),
          "left_descents": sorted(left_descents(w)),
          "is_horospherical": is_horospherical(w, J).holds,
          "nonsingular_sufficient": is_nonsingular_horospherical(w, J)}, out)


def cmd_interval(args, cfg, out):
    rs = build_root_system(args.type)
    top = parse_element(rs, args.top)
    bottom = parse_element(rs, args.bottom)
    iv = interval(bottom, top, cap=cfg.interval_cap)
    payload = {"type": rs.name, **iv.to_json()}
    if iv.rank <= cfg.boolean_rank_cap:
        payload["is_boolean"] = is_boolean_interval(iv, rank_cap=cfg.boolean_rank_cap)
    emit(payload, out)


def census_row(w, interval_cap: int) -> dict:
    c = classify_full(w, cap=interval_cap)
    row = {"word": list(w.word), "length": w.length, "support": sorted(support(w)),
           "descents": sorted(left_descents(w))}
    data = c.to_json()
    for flag in FLAGS:
        row[flag] = data[flag]
    row["closed_orbit_count"] = c.closed_orbit_count
    return row


def _census_chunk(type_name: str, words: list, interval_cap: int) -> list[dict]:
    rs = build_root_system(type_name)
    return [census_row(weyl.from_word(rs, word), interval_cap) for word in words]


def census_rows(type_name: str, cfg: Config, max_length: int | None = None, only=()):
    """Census rows sorted by (length, canonical word), filtered by flags."""
    rs = build_root_system(type_name)
    elements = sorted(enumerate_group(rs, max_length=max_length, cap=cfg.enumeration_cap), key=sort_key)
    words = [w.word for w in elements]
    if cfg.workers > 1 and len(words) > 1:
        size = max(1, len(words) // (cfg.workers * 4))
        chunks = [words[k:k + size] for k in range(0, len(words), size)]
        with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
            parts = pool.map(_census_chunk, [rs.name] * len(chunks), chunks,
                             [cfg.interval_cap] * len(chunks))
            rows = [r for part in parts for r in part]
    else:
        rows = [census_row(w, cfg.interval_cap) for w in elements]
    return [r for r in rows if all(r[f] for f in only)]


def _csv_cell(v):
    if isinstance(v, list):
        return " ".join(map(str, v))
    if v is None:
        return ""
    return str(v).lower() if isinstance(v, bool) else v


def cmd_census(args, cfg, out):
    only = []
    for name in args.only or ():
        if name not in FLAG_ALIASES:
            raise UserError(f"unknown flag {name!r}; choose from {', '.join(sorted(FLAG_ALIASES))}")
        only.append(FLAG_ALIASES[name])
    rs = build_root_system(args.type)
    rows = census_rows(rs.name, cfg, max_length=args.max_length, only=only)
    counts = {f: sum(1 for r in rows if r[f]) for f in FLAGS}
    summary = {"type": rs.name, "rows": len(rows), "counts": counts}
    if cfg.output_format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        header = ["schema", "word", "length", "support", "descents", *FLAGS, "closed_orbit_count"]
        writer.writerow(header)
        for r in rows:
            writer.writerow([SCHEMA] + [_csv_cell(r[h]) for h in header[1:]])
        out.write(buf.getvalue())
        out.write("# summary " + json.dumps(summary) + "\n")
    else:
        for r in rows:
            emit(r, out)
        emit({"summary": summary}, out)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="key=value config file; flags override it")
    common.add_argument("--enumeration-cap", type=int, help="maximum group size to enumerate")
    common.add_argument("--interval-cap", type=int, help="maximum Bruhat interval size")
    common.add_argument("--boolean-rank-cap", type=int, help="maximum rank for the Boolean test")
    common.add_argument("--oracle-length-cap", type=int, help="maximum length for subword oracles")
    common.add_argument("--format", dest="output_format", choices=("json", "csv"), help="census output format")
    common.add_argument("--workers", type=int, help="census worker processes")

    p = argparse.ArgumentParser(
        prog="schubclass",
        description="Classify Schubert varieties X_wB via Weyl group combinatorics.",
        epilog="Words: '1 2 1' or '1,2,1'; 'w0' is the longest element, 'w0([1,3])' that of W_J.",
    )
    sub = p.add_subparsers(dest="cmd", required=True)

    s = sub.add_parser("classify", parents=[common], help="classify one element")
    s.add_argument("type", help="Cartan type such as A3 or G2")
    s.add_argument("word", help="element as a word")
    s.add_argument("--levi", help="Levi subset J, e.g. 1,2 (default: left descent set)")
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("census", parents=[common], help="classify every element of W")
    s.add_argument("type")
    s.add_argument("--only", action="append", metavar="FLAG", help="keep rows with this flag set (repeatable)")
    s.add_argument("--max-length", type=int, help="only elements up to this length")
    s.set_defaults(func=cmd_census)

    s = sub.add_parser("closed-orbits", parents=[common], help="number of closed L_J-orbits")
    s.add_argument("type")
    s.add_argument("word")
    s.add_argument("--levi", help="Levi subset J (default: left descent set)")
    s.set_defaults(func=cmd_closed_orbits)

    s = sub.add_parser("kernel", parents=[common], help="joint kernel of the beta-sequence of a reduced word")
    s.add_argument("type")
    s.add_argument("word")
    s.add_argument("--isogeny", default="simply_connected", help="sc | adjoint")
    s.set_defaults(func=cmd_kernel)

    s = sub.add_parser("construct", parents=[common], help="nonsingular horospherical element with I_w = J")
    s.add_argument("type")
    s.add_argument("--levi", required=True)
    s.set_defaults(func=cmd_construct)

    s = sub.add_parser("interval", parents=[common], help="dump a Bruhat interval [bottom, top]")
    s.add_argument("type")
    s.add_argument("bottom")
    s.add_argument("top")
    s.set_defaults(func=cmd_interval)
    return p


def main(argv: list[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    try:
        cfg = build_config(args)
        args.func(args, cfg, out)
    except CapExceeded as exc:
        print(f"error: resource cap: {exc}", file=sys.stderr)
        return EXIT_CAP
    except InternalInconsistency as exc:
        print(f"error: internal inconsistency: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (UserError, SchubertError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USER
    return 0


if __name__ == "__main__":
    sys.exit(main())
