"""Command-line interface: ``grassmod <verb> ...``.

Exit codes: 0 pass, 2 fail, 3 inconclusive, 4 skipped; 64 for bad input
(unknown check, bad parameters, cap exceeded) and 74 for I/O failures.
"""

from __future__ import annotations

import sys
from pathlib import Path

import click

from . import __version__
from .cache import CacheStore
from .checks import list_checks, run_check, run_suite
from .config import load_config, set_config
from .errors import BadParams, GrassmodError, IOFailure, TooLarge, UnknownCheck
from .exactcore import parse_field
from .grassmann import enumerate_grassmannian
from .incidence import build_eta
from .reports import dumps

EXIT_USAGE = 64
EXIT_IO = 74


def _emit(ctx: click.Context, text: str, out: str | None) -> None:
    if out is None:
        click.echo(text, nl=False)
        return
    try:
        Path(out).write_text(text, encoding="utf-8")
    except OSError as exc:
        raise IOFailure(f"cannot write {out}: {exc}") from exc


def _cache(ctx: click.Context) -> CacheStore | None:
    return None if ctx.obj["no_cache"] else CacheStore()


def _parse_kv(pairs) -> dict:
    out = {}
    for item in pairs:
        if "=" not in item:
            raise BadParams(f"expected key=value, got {item!r}")
        k, v = item.split("=", 1)
        out[k.strip()] = v.strip()
    return out


class _Group(click.Group):
    """Maps library errors onto the exit-code contract."""

    def invoke(self, ctx):
        try:
            return super().invoke(ctx)
        except (UnknownCheck, BadParams, TooLarge) as exc:
            click.echo(f"error: {type(exc).__name__}: {exc}", err=True)
            ctx.exit(EXIT_USAGE)
        except IOFailure as exc:
            click.echo(f"error: {exc}", err=True)
            ctx.exit(EXIT_IO)
        except GrassmodError as exc:
            click.echo(f"error: {type(exc).__name__}: {exc}", err=True)
            ctx.exit(EXIT_USAGE)


@click.group(cls=_Group)
@click.version_option(__version__, prog_name="grassmod")
@click.option("--cache-dir", type=click.Path(file_okay=False), default=None, help="Cache directory.")
@click.option("--no-cache", is_flag=True, help="Do not read or write the on-disk cache.")
@click.option("--max-grassmannian", type=int, default=None, help="Cap on |Gr(r, F_q^n)|.")
@click.option("--max-spin-dim", type=int, default=None, help="Cap on the rank of spun modules.")
@click.option("--workers", type=int, default=None, help="Worker processes for the suite.")
@click.pass_context
def cli(ctx, cache_dir, no_cache, max_grassmannian, max_spin_dim, workers):
    """Exact checks on permutation modules over Grassmannians of finite vector spaces."""
    set_config(load_config({"cache_dir": cache_dir, "max_grassmannian": max_grassmannian,
                            "max_spin_dim": max_spin_dim, "workers": workers}))
    ctx.ensure_object(dict)
    ctx.obj["no_cache"] = no_cache


@cli.command("enum")
@click.argument("q", type=int)
@click.argument("n", type=int)
@click.argument("r", type=int)
@click.option("--out", type=click.Path(dir_okay=False), default=None)
@click.option("--json", "as_json", is_flag=True, help="Machine-readable output.")
@click.pass_context
def cmd_enum(ctx, q, n, r, out, as_json):
    """List Gr(r, F_q^n) in canonical order."""
    from .exactcore import field_of_order

    index = enumerate_grassmannian(field_of_order(q), n, r)
    cache = _cache(ctx)
    if cache is not None:
        cache.put_enumeration((q, n, r), [L.basis for L in index])
    if as_json or out is not None:
        text = dumps({"q": q, "n": n, "r": r, "count": len(index), "subspaces": [L.basis for L in index]})
    else:
        lines = [f"Gr({r}, F_{q}^{n}): {len(index)} subspaces"]
        lines += [f"{i}\t" + " | ".join(" ".join(map(str, row)) for row in L.basis) for i, L in enumerate(index)]
        text = "\n".join(lines) + "\n"
    _emit(ctx, text, out)


@cli.command("eta")
@click.argument("q", type=int)
@click.argument("n", type=int)
@click.argument("r0", type=int)
@click.argument("r1", type=int)
@click.argument("s", type=int)
@click.option("--field", "field_name", default="Q", show_default=True, help="Coefficient field (Q, F5, ...).")
@click.option("--out", type=click.Path(dir_okay=False), default=None)
@click.option("--json", "as_json", is_flag=True)
@click.pass_context
def cmd_eta(ctx, q, n, r0, r1, s, field_name, out, as_json):
    """Build the incidence operator eta_s^{r0,r1}."""
    K = parse_field(field_name)
    op = build_eta(K, q, n, r0, r1, s, _cache(ctx))
    counts = sorted(set(op.column_counts()))
    info = {"q": q, "n": n, "r0": r0, "r1": r1, "s": s, "field": K.name,
            "rows": op.pattern.nrows, "cols": op.pattern.ncols, "nnz": len(op.pattern.entries),
            "column_counts": counts}
    if as_json or out is not None:
        info["entries"] = [[i, j] for i, j, _ in op.pattern.entries]
        text = dumps(info)
    else:
        text = (f"eta_{s}^({r0},{r1}) on F_{q}^{n} over {K.name}: {info['rows']}x{info['cols']}, "
                f"nnz={info['nnz']}, column sums {counts}\n")
    _emit(ctx, text, out)


@cli.command("spin")
@click.argument("q", type=int)
@click.argument("n", type=int)
@click.argument("r", type=int)
@click.option("--vector", "vectors", multiple=True,
              help="Seed as 'index:coef,index:coef' (repeatable). Default: [L_0] - [L_j], L_j adjacent to L_0.")
@click.option("--field", "field_name", default="Q", show_default=True)
@click.option("--json", "as_json", is_flag=True)
@click.option("--out", type=click.Path(dir_okay=False), default=None)
@click.pass_context
def cmd_spin(ctx, q, n, r, vectors, field_name, as_json, out):
    """Spin seed vectors of K[Gr(r, F_q^n)] to the submodule they generate."""
    from .exactcore import field_of_order
    from .gmodule import spin
    from .grassmann import grassmannian, pair_orbit_invariant
    from .vectors import ModuleVector

    K = parse_field(field_name)
    index = grassmannian(field_of_order(q), n, r)
    seeds = []
    for text in vectors:
        coeffs = [K.zero] * len(index)
        for term in filter(None, text.split(",")):
            try:
                i, c = term.split(":")
                coeffs[int(i)] = K.add(coeffs[int(i)], K.parse(c))
            except (ValueError, IndexError):
                raise BadParams(f"bad vector term {term!r}") from None
        seeds.append(ModuleVector(K, index, coeffs))
    if not seeds:
        j = next((j for j in range(1, len(index)) if pair_orbit_invariant(index[0], index[j]) == (r - 1, 1, 1)), None)
        if j is None:
            raise BadParams("no adjacent pair in this Grassmannian; pass --vector")
        seeds = [ModuleVector.basis(K, index, 0) - ModuleVector.basis(K, index, j)]
    S = spin(seeds)
    info = {"q": q, "n": n, "r": r, "field": K.name, "module_rank": len(index), "dim": S.dim,
            "is_full": S.dim == len(index),
            "in_augmentation_kernel": all(K.sum(row) == 0 for row in S.rows)}
    if as_json or out is not None:
        text = dumps(info)
    else:
        text = f"spin dimension {S.dim} of {len(index)} (augmentation kernel: {info['in_augmentation_kernel']})\n"
    _emit(ctx, text, out)


def _report_out(ctx, report, as_json: bool, out: str | None) -> None:
    if as_json or out is not None:
        _emit(ctx, report.to_json(), out)
    if not as_json:
        lines = [r.summary() for r in getattr(report, "reports", [report])]
        if hasattr(report, "reports"):
            lines.append(f"suite {report.profile}: {report.status}")
        click.echo("\n".join(lines))


@cli.command("verify")
@click.argument("check_id")
@click.argument("params", nargs=-1)
@click.option("--seed", type=int, default=None, help="Base seed (default from GRASSMOD_SEED).")
@click.option("--json", "as_json", is_flag=True)
@click.option("--out", type=click.Path(dir_okay=False), default=None)
@click.option("--timings", is_flag=True, help="Include runtime_ms (makes reports non-reproducible).")
@click.pass_context
def cmd_verify(ctx, check_id, params, seed, as_json, out, timings):
    """Run one check; PARAMS are key=value pairs."""
    report = run_check(check_id, _parse_kv(params), seed, timings=timings, cache=_cache(ctx))
    _report_out(ctx, report, as_json, out)
    ctx.exit(report.exit_code)


@cli.command("suite")
@click.argument("profile", default="quick")
@click.option("--seed", type=int, default=None)
@click.option("--json", "as_json", is_flag=True)
@click.option("--out", type=click.Path(dir_okay=False), default=None)
@click.option("--timings", is_flag=True)
@click.pass_context
def cmd_suite(ctx, profile, seed, as_json, out, timings):
    """Run every check with the quick or full parameter set."""
    report = run_suite(profile, seed, timings=timings, cache=_cache(ctx))
    _report_out(ctx, report, as_json, out)
    ctx.exit(report.exit_code)


@cli.command("list-checks")
@click.option("--json", "as_json", is_flag=True)
def cmd_list_checks(as_json):
    """Show every check id with the claim it verifies."""
    rows = list_checks()
    if as_json:
        click.echo(dumps({cid: anchor for cid, anchor in rows}), nl=False)
    else:
        for cid, anchor in rows:
            click.echo(f"{cid}\t{anchor}")


@cli.group("cache")
def cmd_cache():
    """Inspect or clean the on-disk cache."""


@cmd_cache.command("stat")
@click.option("--json", "as_json", is_flag=True)
def cmd_cache_stat(as_json):
    info = CacheStore().stat()
    if as_json:
        click.echo(dumps(info), nl=False)
    else:
        for k in sorted(info):
            click.echo(f"{k}: {info[k]}")


@cmd_cache.command("gc")
@click.option("--all", "everything", is_flag=True, help="Remove every cache file.")
def cmd_cache_gc(everything):
    removed = CacheStore().gc(everything)
    click.echo(f"removed {removed} files")


def main(argv=None):
    return cli.main(args=argv, prog_name="grassmod")


if __name__ == "__main__":
    sys.exit(main())
