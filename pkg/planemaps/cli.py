"""
Command-line front end: seeded instance generation, census, genericity
audit, index queries and batch verification.

Usage:
    python scripts/planemaps.py gen --d1 2 --d2 2 --seed 42
    python scripts/planemaps.py analyze --in corpus/golden/gen_3_2_seed7.map
    python scripts/planemaps.py analyze --in map.txt --format json --out report.json
    python scripts/planemaps.py genericity --in corpus/nongeneric/row_condition.map
    python scripts/planemaps.py index --in corpus/local/simple_cusp.map --point 0,0
    python scripts/planemaps.py verify --d1 1:3 --d2 1:3 --seeds 3
    python scripts/planemaps.py verify --d1 3 --d2 3 --seeds 5 --field prime:1000003 --reverify
    python scripts/planemaps.py verify --in corpus/nongeneric.yml

Environment variables (set in .env file):
    PLANEMAPS_BUDGET - default S-pair budget
    PLANEMAPS_PRIME - prime used by --field prime (without an explicit p)
    PLANEMAPS_COEFF_BOUND - default --coeff-bound
    PLANEMAPS_SEED - default --seed

Exit codes: 0 ok, 2 parse/config error, 3 budget exhausted, 4 verification
mismatch.
"""
import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from pathlib import Path
from typing import List, Optional, Tuple

import yaml
from jinja2 import Environment, FileSystemLoader

from planemaps import settings
from planemaps.census import ASSUMED_PROPER, cusp_sum_bound_check, full_census, gradient_count
from planemaps.errors import (
    EXIT_BUDGET, EXIT_MISMATCH, EXIT_OK, ConfigError, ParseError, PlaneMapsError, exit_code_for,
)
from planemaps.genericity import genericity_report
from planemaps.jets import PlaneMap
from planemaps.localint import RatPoint
from planemaps.polyring import XY, FieldMode, format_poly, parse_poly, parse_rational, total_degree
from planemaps.sampling import random_map

TEMPLATE_DIR = Path(__file__).parent / 'templates'

COMMANDS = ('gen', 'analyze', 'verify', 'index', 'genericity')

# text templates per command
TEMPLATES = {
    'analyze': 'census_report.j2',
    'genericity': 'genericity_report.j2',
    'index': 'index_report.j2',
    'verify': 'verify_summary.j2',
}

MAP_KEYS = ('f', 'g')


# ---------------------------------------------------------------------------
# Run configuration
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RunConfig:
    command: str
    d1: Optional[int] = None
    d2: Optional[int] = None
    d1_range: Optional[Tuple[int, int]] = None
    d2_range: Optional[Tuple[int, int]] = None
    seed: int = settings.DEFAULT_SEED
    seeds: int = 1
    coeff_bound: int = settings.DEFAULT_COEFF_BOUND
    field: FieldMode = FieldMode()
    output: str = 'text'
    input: Optional[str] = None
    out: Optional[str] = None
    budget: Optional[int] = None
    point: Optional[str] = None
    matrix: str = 'auto'
    reverify: bool = False
    jobs: int = 1
    quiet: bool = False


def parse_range(text: str) -> Tuple[int, int]:
    """'3' -> (3, 3); '1:4' -> (1, 4)."""
    try:
        if ':' in text:
            lo, hi = (int(part) for part in text.split(':', 1))
        else:
            lo = hi = int(text)
    except ValueError:
        raise ConfigError(f"Bad degree or range {text!r}")
    if lo < 1 or hi < lo:
        raise ConfigError(f"Bad degree range {text!r}")
    return lo, hi


def parse_field(text: Optional[str], env: settings.Settings) -> FieldMode:
    if text is None:
        return FieldMode()
    if text == 'prime':
        return FieldMode('prime', env.prime)
    return FieldMode.parse(text)


def parse_matrix(text: str):
    """'auto' or 'a,b;c,d' with rational entries."""
    if text == 'auto':
        return 'auto'
    try:
        rows = [[parse_rational(v) for v in row.split(',')] for row in text.split(';')]
    except ValueError:
        raise ConfigError(f"Bad matrix {text!r}")
    if len(rows) != 2 or any(len(row) != 2 for row in rows):
        raise ConfigError(f"Matrix must be 2x2 as 'a,b;c,d', got {text!r}")
    if rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0] == 0:
        raise ConfigError(f"Matrix {text!r} is singular")
    return tuple(tuple(row) for row in rows)


def config_from_args(args, env: settings.Settings = None) -> RunConfig:
    if env is None:
        env = settings.SETTINGS
    seed = env.seed if args.seed is None else args.seed
    if not 0 <= seed < settings.SEED_LIMIT:
        raise ConfigError(f"Seed must be a 64-bit unsigned integer, got {seed}")
    coeff_bound = env.coeff_bound if args.coeff_bound is None else args.coeff_bound
    if coeff_bound < 1:
        raise ConfigError(f"Coefficient bound must be positive, got {coeff_bound}")
    budget = env.budget if args.budget is None else args.budget
    if budget < 1:
        raise ConfigError(f"Budget must be positive, got {budget}")

    config = RunConfig(
        command=args.command,
        seed=seed,
        coeff_bound=coeff_bound,
        field=parse_field(getattr(args, 'field', None), env),
        output=args.format,
        input=getattr(args, 'input', None),
        out=args.out,
        budget=budget,
        quiet=args.quiet,
    )

    d1_text, d2_text = getattr(args, 'd1', None), getattr(args, 'd2', None)
    if args.command == 'verify':
        if config.input is None and (d1_text is None or d2_text is None):
            raise ConfigError("verify needs --d1 and --d2 (or --in MANIFEST)")
        if args.seeds < 1:
            raise ConfigError(f"--seeds must be positive, got {args.seeds}")
        if args.jobs < 1:
            raise ConfigError(f"--jobs must be positive, got {args.jobs}")
        return replace(
            config,
            d1_range=parse_range(d1_text) if d1_text else None,
            d2_range=parse_range(d2_text) if d2_text else None,
            seeds=args.seeds,
            reverify=args.reverify,
            jobs=args.jobs,
        )

    d1 = parse_range(d1_text)[0] if d1_text else None
    d2 = parse_range(d2_text)[0] if d2_text else None
    if args.command == 'gen' and (d1 is None or d2 is None):
        raise ConfigError("gen needs --d1 and --d2")
    if args.command != 'gen' and config.input is None:
        raise ConfigError(f"{args.command} needs --in FILE")
    if args.command == 'index':
        if not args.point:
            raise ConfigError("index needs --point X,Y")
        parse_matrix(args.matrix)
        return replace(config, d1=d1, d2=d2, point=args.point, matrix=args.matrix)
    return replace(config, d1=d1, d2=d2)


# ---------------------------------------------------------------------------
# Map files
# ---------------------------------------------------------------------------

def parse_map_text(text: str, d1: Optional[int] = None, d2: Optional[int] = None) -> PlaneMap:
    """Parse lines 'f = <poly>' and 'g = <poly>'; '#' starts a comment line."""
    found = {}
    line_no = 0
    for line_no, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith('#'):
            continue
        key, sep, body = raw.partition('=')
        key = key.strip()
        if not sep or key not in MAP_KEYS:
            raise ParseError("Expected 'f = <poly>' or 'g = <poly>'", line_no, 1)
        if key in found:
            raise ParseError(f"Duplicate definition of {key}", line_no, 1)
        found[key] = parse_poly(body, XY, line=line_no, offset=raw.index('=') + 1)
    for key in MAP_KEYS:
        if key not in found:
            raise ParseError(f"Missing definition of {key}", max(line_no, 1), 1)
    f, g = found['f'], found['g']
    if d1 is None:
        d1 = max(total_degree(f), 1)
    if d2 is None:
        d2 = max(total_degree(g), 1)
    return PlaneMap(f, g, d1, d2)


def read_map_file(path, d1: Optional[int] = None, d2: Optional[int] = None) -> PlaneMap:
    return parse_map_text(Path(path).read_text(), d1, d2)


def map_file_text(F: PlaneMap, header: Optional[str] = None) -> str:
    lines = [f"# {header}"] if header else []
    lines.append(f"f = {format_poly(F.f)}")
    lines.append(f"g = {format_poly(F.g)}")
    return '\n'.join(lines) + '\n'


# ---------------------------------------------------------------------------
# Output
# ---------------------------------------------------------------------------

def progress(config: RunConfig, message: str = ''):
    """Progress goes to stdout for text output and to stderr for JSON."""
    if config.quiet:
        return
    stream = sys.stderr if config.output == 'json' else sys.stdout
    print(message, file=stream)


def banner(config: RunConfig, title: str):
    progress(config, f"\n{'='*60}")
    progress(config, title)
    progress(config, f"{'='*60}")


def render_text(command: str, **context) -> str:
    env = Environment(loader=FileSystemLoader(str(TEMPLATE_DIR)),
                      trim_blocks=True, lstrip_blocks=True, keep_trailing_newline=True)
    template = env.get_template(TEMPLATES[command])
    return template.render(**context)


def render_json(payload) -> str:
    return json.dumps(payload, indent=2, sort_keys=True) + '\n'


def emit(config: RunConfig, text: str):
    if config.out:
        Path(config.out).write_text(text)
        progress(config, f"Written: {config.out}")
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------

def gen(config: RunConfig) -> int:
    F = random_map(config.d1, config.d2, config.seed, config.coeff_bound)
    header = f"gen d1={config.d1} d2={config.d2} seed={config.seed} coeff_bound={config.coeff_bound}"
    if config.output == 'json':
        text = render_json({
            'd1': config.d1,
            'd2': config.d2,
            'seed': config.seed,
            'coeffBound': config.coeff_bound,
            'map': F.format(),
        })
    else:
        text = map_file_text(F, header)
    emit(config, text)
    return EXIT_OK


def analyze(config: RunConfig) -> int:
    F = read_map_file(config.input, config.d1, config.d2)
    banner(config, f"Census of {config.input} (d1={F.d1}, d2={F.d2})")
    report = full_census(F, config.seed, config.field, config.budget)
    if config.output == 'json':
        emit(config, render_json(report.to_dict()))
    else:
        emit(config, render_text('analyze', report=report.to_dict()))
    if report.has_budget_failure:
        return EXIT_BUDGET
    if report.computed.value is None:
        return EXIT_MISMATCH
    return EXIT_OK


def genericity(config: RunConfig) -> int:
    F = read_map_file(config.input, config.d1, config.d2)
    banner(config, f"Genericity of {config.input} (d1={F.d1}, d2={F.d2})")
    report = genericity_report(F, config.seed, config.budget)
    payload = {
        'd1': F.d1,
        'd2': F.d2,
        'map': F.format(),
        'genericity': report.verdicts(),
        'genericityNotes': report.notes(),
        'genericityLabel': report.label,
        'generic': report.is_generic,
        'shear': report.shear,
        'seed': config.seed,
    }
    if config.output == 'json':
        emit(config, render_json(payload))
    else:
        emit(config, render_text('genericity', report=payload))
    return EXIT_BUDGET if report.has_budget_failure else EXIT_OK


def index(config: RunConfig) -> int:
    F = read_map_file(config.input, config.d1, config.d2)
    a = RatPoint.parse(config.point)
    T = parse_matrix(config.matrix)
    banner(config, f"Generalized cusp index of {config.input} at {a}")
    check = cusp_sum_bound_check(F, [a], T, config.seed)
    mu = check.sum
    payload = {
        'd1': F.d1,
        'd2': F.d2,
        'map': F.format(),
        'point': str(a),
        'matrix': config.matrix,
        'index': mu,
        'bound': check.bound,
        'withinBound': check.ok,
        'seed': config.seed,
        'flags': [ASSUMED_PROPER],
    }
    if config.output == 'json':
        emit(config, render_json(payload))
    else:
        emit(config, render_text('index', report=payload))
    return EXIT_OK


def verify_cell(d1: int, d2: int, seed: int, coeff_bound: int, field_label: str,
                budget: int, reverify: bool) -> dict:
    """Census of one seeded random map, reduced to the verification record."""
    F = random_map(d1, d2, seed, coeff_bound)
    report = full_census(F, seed, FieldMode.parse(field_label), budget, reverify)
    reasons = []
    if report.computed.value != report.cusp_formula:
        reasons.append(f"computed cusps {report.computed_cusp_count} != formula {report.cusp_formula}")
    if report.computed.value is not None and report.computed.dim_grad != gradient_count(report.d1):
        reasons.append(f"dim grad {report.computed.dim_grad} != {gradient_count(report.d1)}")
    if not report.genericity.is_generic:
        reasons.append('not generic: ' + ','.join(report.genericity.failing()))
    if report.serre_residual != 0:
        reasons.append(f"serre residual {report.serre_residual}")
    if report.has_budget_failure:
        status = 'budget'
    elif reasons:
        status = 'fail'
    else:
        status = 'pass'
    return {
        'd1': d1,
        'd2': d2,
        'seed': seed,
        'status': status,
        'reasons': reasons,
        'cuspFormula': report.cusp_formula,
        'computedCusps': report.computed_cusp_count,
        'dimGrad': report.computed.dim_grad,
        'dimJJ11': report.computed.dim_jj11,
        'genericity': report.genericity.verdicts(),
        'serreResidual': report.serre_residual,
        'reverified': reverify,
        'flags': list(report.flags),
    }


def _verify_cell_task(task) -> dict:
    return verify_cell(*task)


def verify_tasks(config: RunConfig) -> List[tuple]:
    tasks = []
    for d1 in range(config.d1_range[0], config.d1_range[1] + 1):
        for d2 in range(config.d2_range[0], config.d2_range[1] + 1):
            for k in range(config.seeds):
                seed = config.seed + k
                reverify = config.reverify and config.field.is_prime and k == 0
                tasks.append((d1, d2, seed, config.coeff_bound, config.field.label,
                              config.budget, reverify))
    return tasks


def verify_manifest_entry(entry: dict, base: Path, config: RunConfig) -> dict:
    """
    Census of one manifest map. With 'expect_fail' the entry passes when the
    map, as written, fails exactly the listed checks; without it the map must
    be generic and match the formula.
    """
    path = base / entry['file']
    F = read_map_file(path, entry.get('d1'), entry.get('d2'))
    report = full_census(F, config.seed, config.field, config.budget)
    failing = report.genericity.failing()
    expected = entry.get('expect_fail')
    reasons = []
    if expected is not None:
        failing = genericity_report(F, config.seed, config.budget).failing()
        missing = [key for key in expected if key not in failing]
        extra = [key for key in failing if key not in expected]
        if missing:
            reasons.append('expected to fail but passed: ' + ','.join(missing))
        if extra:
            reasons.append('failed unexpectedly: ' + ','.join(extra))
    else:
        if failing:
            reasons.append('not generic: ' + ','.join(failing))
        if report.computed.value != report.cusp_formula:
            reasons.append(f"computed cusps {report.computed_cusp_count} != formula {report.cusp_formula}")
    status = 'budget' if report.has_budget_failure else ('fail' if reasons else 'pass')
    record = {
        'file': entry['file'],
        'd1': report.d1,
        'd2': report.d2,
        'seed': config.seed,
        'status': status,
        'reasons': reasons,
        'failing': failing,
        'cuspFormula': report.cusp_formula,
        'computedCusps': report.computed_cusp_count,
        'genericity': report.genericity.verdicts(),
        'serreResidual': report.serre_residual,
        'flags': list(report.flags),
    }
    if expected is not None:
        record['expectedFailing'] = list(expected)
        record['asExpected'] = not reasons
    return record


def read_manifest(path) -> List[dict]:
    try:
        data = yaml.safe_load(Path(path).read_text())
    except yaml.YAMLError as e:
        raise ConfigError(f"Bad manifest {path}: {e}")
    if not isinstance(data, dict) or not isinstance(data.get('maps'), list):
        raise ConfigError(f"Manifest {path} needs a 'maps' list")
    for entry in data['maps']:
        if not isinstance(entry, dict) or 'file' not in entry:
            raise ConfigError(f"Manifest entry without 'file': {entry!r}")
    return data['maps']


def verify(config: RunConfig) -> int:
    if config.input is not None:
        entries = read_manifest(config.input)
        base = Path(config.input).parent
        banner(config, f"Verifying {len(entries)} maps from {config.input}")
        records = []
        for entry in entries:
            record = verify_manifest_entry(entry, base, config)
            progress(config, f"[{record['file']}] {record['status']} {'; '.join(record['reasons'])}")
            records.append(record)
    else:
        tasks = verify_tasks(config)
        banner(config, f"Verifying {len(tasks)} cells "
                       f"(d1 {config.d1_range}, d2 {config.d2_range}, field {config.field.label})")
        if config.jobs > 1:
            with ProcessPoolExecutor(max_workers=config.jobs) as pool:
                records = list(pool.map(_verify_cell_task, tasks))
        else:
            records = [verify_cell(*task) for task in tasks]
        for record in records:
            progress(config, f"[{record['d1']},{record['d2']} seed={record['seed']}] "
                             f"{record['status']} {'; '.join(record['reasons'])}")

    summary = {
        status: sum(1 for r in records if r['status'] == status)
        for status in ('pass', 'fail', 'budget')
    }
    banner(config, f"Summary: {summary['pass']} passed, {summary['fail']} failed, "
                   f"{summary['budget']} over budget")

    payload = {'cells': records, 'summary': summary, 'field': config.field.label}
    if config.output == 'json':
        emit(config, render_json(payload))
    else:
        emit(config, render_text('verify', records=records, summary=summary,
                                 field=config.field.label))
    if summary['fail']:
        return EXIT_MISMATCH
    if summary['budget']:
        return EXIT_BUDGET
    return EXIT_OK


COMMAND_HANDLERS = {
    'gen': gen,
    'analyze': analyze,
    'genericity': genericity,
    'index': index,
    'verify': verify,
}


# ---------------------------------------------------------------------------
# Argument parsing
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog='planemaps',
                                     description='Singularity census of polynomial plane maps')
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--seed', type=int, help='Run seed (64-bit unsigned)')
    common.add_argument('--coeff-bound', type=int, help='Coefficient bound for generated maps')
    common.add_argument('--budget', type=int, help='S-pair budget per Groebner basis')
    common.add_argument('--format', choices=['text', 'json'], default='text', help='Output format')
    common.add_argument('--out', type=str, help='Write output to this file')
    common.add_argument('--quiet', '-q', action='store_true', help='No progress lines')

    sub = parser.add_subparsers(dest='command', required=True)

    p = sub.add_parser('gen', parents=[common], help='Generate a seeded dense map')
    p.add_argument('--d1', type=str, required=True, help='Degree cap of f')
    p.add_argument('--d2', type=str, required=True, help='Degree cap of g')

    for name, help_text in (('analyze', 'Full census of a map file'),
                            ('genericity', 'Genericity audit of a map file')):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument('--in', dest='input', type=str, required=True, help='Map file')
        p.add_argument('--d1', type=str, help='Degree cap of f (default: deg f)')
        p.add_argument('--d2', type=str, help='Degree cap of g (default: deg g)')
        if name == 'analyze':
            p.add_argument('--field', type=str, help="'rational' or 'prime:<p>'")

    p = sub.add_parser('index', parents=[common], help='Generalized cusp index at a point')
    p.add_argument('--in', dest='input', type=str, required=True, help='Map file')
    p.add_argument('--d1', type=str, help='Degree cap of f')
    p.add_argument('--d2', type=str, help='Degree cap of g')
    p.add_argument('--point', type=str, required=True, help='Rational point X,Y')
    p.add_argument('--matrix', type=str, default='auto', help="Target matrix 'a,b;c,d' or 'auto'")

    p = sub.add_parser('verify', parents=[common], help='Batch verification')
    p.add_argument('--d1', type=str, help='Degree or range LO:HI')
    p.add_argument('--d2', type=str, help='Degree or range LO:HI')
    p.add_argument('--seeds', type=int, default=1, help='Seeds per degree cell')
    p.add_argument('--in', dest='input', type=str, help='YAML manifest of map files')
    p.add_argument('--field', type=str, help="'rational' or 'prime:<p>'")
    p.add_argument('--reverify', action='store_true',
                   help='In prime mode, re-verify the first seed of each cell over QQ')
    p.add_argument('--jobs', type=int, default=1, help='Worker processes')

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = config_from_args(args)
        return COMMAND_HANDLERS[config.command](config)
    except PlaneMapsError as e:
        print(f"Error: {e}", file=sys.stderr)
        return exit_code_for(e)
    except (ValueError, OSError) as e:
        print(f"Error: {e}", file=sys.stderr)
        return exit_code_for(e)


if __name__ == '__main__':
    sys.exit(main())
