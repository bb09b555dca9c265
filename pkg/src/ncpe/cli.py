"""Command-line front end: build the posets, run the verification
suites, compute Moebius values by every available method, and export
Hasse diagrams or noncrossing trees as DOT.

Exit codes: 0 all requested verdicts pass, 1 at least one verdict
fails, 2 usage error (including size caps).  With --json the report is
byte-identical across runs; timing goes to stderr in human mode only.
"""

from __future__ import annotations

import json
import sys
import time
from fractions import Fraction
from math import comb

import click

from .builders import (BuildError, build_nc, build_pe_dref, build_pi, catalan,
                       distinguished_chain, pe_members)
from .labelings import (EdgeLabeling, count_decreasing_chains,
                        left_modular_labeling, parking_labeling,
                        usual_labeling, verify_el, verify_sn_el)
from .nbb import (Atom, base_to_tree, classification_census,
                  enumerate_nbb_bases_top, moebius_via_nbb)
from .parking import build_D, build_pe_pchn, chain_parking_word, count_D
from .partitions import PartitionError, SetPartition, parse_partition
from .posets import FinitePoset, PosetError

TARGETS = ("pi", "nc", "pe-dref", "pe-pchn")


def _build(target: str, n: int) -> FinitePoset:
    try:
        if target == "pi":
            return build_pi(n)
        if target == "nc":
            return build_nc(n)
        if target == "pe-dref":
            return build_pe_dref(n)
        return build_pe_pchn(n)
    except BuildError as exc:
        raise click.UsageError(str(exc))


def _labeling(target: str, n: int, poset: FinitePoset, scheme: str) -> EdgeLabeling:
    """The requested edge labeling; the left-modular scheme on the
    chain-defined order is the restriction from the dref order."""
    if scheme == "parking":
        return parking_labeling(poset)
    if scheme == "usual":
        return usual_labeling(poset)
    if target == "pi":
        raise click.UsageError("left-modular labeling is not provided for 'pi'")
    if target == "pe-pchn":
        dref = build_pe_dref(n)
        lam = left_modular_labeling(dref, distinguished_chain(n).elements)
        return lam.restrict(poset)
    return left_modular_labeling(poset, distinguished_chain(n).elements)


def _emit(report: dict, as_json: bool, failed: bool, started: float) -> None:
    if as_json:
        click.echo(json.dumps(report, indent=2, sort_keys=True))
    else:
        _print_human(report)
        click.echo(f"elapsed: {time.monotonic() - started:.2f}s", err=True)
    if failed:
        sys.exit(1)


def _print_human(report: dict, indent: int = 0) -> None:
    pad = "  " * indent
    for key in sorted(report):
        value = report[key]
        if isinstance(value, dict):
            click.echo(f"{pad}{key}:")
            _print_human(value, indent + 1)
        elif isinstance(value, list):
            click.echo(f"{pad}{key}: " + ", ".join(str(v) for v in value))
        else:
            click.echo(f"{pad}{key}: {value}")


@click.group()
def main() -> None:
    """Exact computations on noncrossing-partition posets."""


@main.command()
@click.argument("target", type=click.Choice(TARGETS))
@click.option("-n", "n", type=int, required=True, help="Ground-set size.")
@click.option("--json", "as_json", is_flag=True, help="Machine-readable output.")
@click.option("--dot", "dot_path", type=click.Path(dir_okay=False),
              help="Write the Hasse diagram as DOT to this file.")
def build(target: str, n: int, as_json: bool, dot_path: str | None) -> None:
    """Build a poset and report element/cover counts.

    Caps: pi n<=9, nc n<=10, pe-dref 3<=n<=10, pe-pchn 3<=n<=8.
    """
    started = time.monotonic()
    poset = _build(target, n)
    report = {
        "command": "build", "target": target, "n": n,
        "elements": len(poset.keys), "covers": len(poset.covers),
    }
    if as_json:
        report["poset"] = json.loads(poset.to_json())
    if dot_path:
        with open(dot_path, "w") as fh:
            fh.write(poset.to_dot())
        report["dot"] = dot_path
    _emit(report, as_json, failed=False, started=started)


@main.command()
@click.option("-n", "n", type=int, required=True, help="Ground-set size.")
@click.option("--target", type=click.Choice(("nc", "pe-dref", "pe-pchn")),
              default="pe-dref", show_default=True)
@click.option("--suite", type=click.Choice(
    ("lattice", "graded", "leftmod", "el", "sn-el", "all")),
    default="all", show_default=True)
@click.option("--json", "as_json", is_flag=True)
def verify(n: int, target: str, suite: str, as_json: bool) -> None:
    """Run structural verification suites (exit 1 on any failure).

    Caps follow the builders; 'leftmod' requires a lattice target and is
    skipped under 'all' for pe-pchn.
    """
    started = time.monotonic()
    poset = _build(target, n)
    verdicts: dict[str, object] = {}
    tables = None
    if suite in ("lattice", "leftmod", "all"):
        tables = poset.lattice_check()
        verdicts["lattice"] = tables.is_lattice
        if not tables.is_lattice and tables.witness is not None:
            verdicts["lattice_witness"] = {
                "pair": [str(k) for k in tables.witness],
                "reason": tables.reason,
            }
    if suite in ("graded", "all"):
        verdicts["graded"] = poset.is_graded()[0]
    if suite in ("leftmod", "all"):
        if target == "pe-pchn":
            if suite == "leftmod":
                raise click.UsageError(
                    "left-modularity needs a lattice; pe-pchn is not one for n>=5")
        elif tables is not None and tables.is_lattice:
            chain = [poset.index(x) for x in distinguished_chain(n).elements]
            verdicts["left_modular_chain"] = poset.is_left_modular_chain(chain, tables)
    if suite in ("el", "sn-el", "all"):
        lam = _labeling(target, n, poset, "leftmod")
        if suite in ("el", "all"):
            verdict = verify_el(poset, lam)
            verdicts["el"] = verdict.el
            if verdict.witness:
                verdicts["el_witness"] = verdict.witness
        if suite in ("sn-el", "all"):
            verdicts["sn_el"] = verify_sn_el(poset, lam)
    failed = any(value is False for value in verdicts.values())
    report = {"command": "verify", "target": target, "n": n, "suite": suite,
              "verdicts": verdicts}
    _emit(report, as_json, failed=failed, started=started)


@main.command()
@click.option("-n", "n", type=int, required=True, help="Ground-set size.")
@click.option("--target", type=click.Choice(("nc", "pe-dref", "pe-pchn")),
              default="pe-dref", show_default=True)
@click.option("--method", type=click.Choice(
    ("recursion", "nbb", "chains", "all")), default="all", show_default=True)
@click.option("--json", "as_json", is_flag=True)
def mobius(n: int, target: str, method: str, as_json: bool) -> None:
    """Moebius value between bottom and top, by independent methods.

    'nbb' sums signed NBB bases and needs a lattice, so it is rejected
    for pe-pchn; 'chains' counts weakly decreasing maximal chains of the
    left-modular labeling.  Exit 1 if methods or closed form disagree.
    """
    started = time.monotonic()
    if method == "nbb" and target == "pe-pchn":
        raise click.UsageError("the NBB method needs a lattice; pe-pchn is not one")
    poset = _build(target, n)
    values: dict[str, int] = {}
    if method in ("recursion", "all"):
        values["recursion"] = poset.moebius_bottom_top()
    if method in ("nbb", "all") and target != "pe-pchn":
        try:
            values["nbb"] = moebius_via_nbb(n, "nc" if target == "nc" else "pe")
        except BuildError as exc:
            raise click.UsageError(str(exc))
    if method in ("chains", "all"):
        lam = _labeling(target, n, poset, "leftmod")
        sign = (-1) ** poset.rank()
        values["chains"] = sign * count_decreasing_chains(poset, lam)
    closed = _closed_form(target, n)
    agree = len(set(values.values())) == 1 and (
        closed is None or closed == next(iter(values.values())))
    report = {"command": "mobius", "target": target, "n": n,
              "method": method, "values": values, "agree": agree}
    if closed is not None:
        report["closed_form"] = closed
    _emit(report, as_json, failed=not agree, started=started)


def _closed_form(target: str, n: int) -> int | None:
    if target == "nc":
        return (-1) ** (n - 1) * catalan(n - 1)
    if target == "pe-dref":
        value = Fraction(4, n) * comb(2 * n - 5, n - 4) if n >= 4 else 0
        assert value == int(value)
        return (-1) ** (n - 1) * int(value)
    if target == "pe-pchn":
        return 0
    return None


@main.command()
@click.option("-n", "n", type=int, required=True, help="Ground-set size.")
@click.option("--ambient", type=click.Choice(("nc", "pe")), default="nc",
              show_default=True)
@click.option("--classify", "do_classify", is_flag=True,
              help="Census of the discard classes (nc ambient only).")
@click.option("--trees", "trees_path", type=click.Path(dir_okay=False),
              help="Write all base trees as DOT to this file.")
@click.option("--json", "as_json", is_flag=True)
def nbb(n: int, ambient: str, do_classify: bool, trees_path: str | None,
        as_json: bool) -> None:
    """Enumerate NBB bases for the top element and their signed count."""
    started = time.monotonic()
    if do_classify and ambient != "nc":
        raise click.UsageError("--classify applies to the nc ambient")
    try:
        bases = enumerate_nbb_bases_top(n, ambient)
    except BuildError as exc:
        raise click.UsageError(str(exc))
    report = {
        "command": "nbb", "ambient": ambient, "n": n,
        "bases": len(bases), "mobius": moebius_via_nbb(n, ambient),
        "base_atoms": [[f"{a.i},{a.j}" for a in base] for base in bases],
    }
    if do_classify:
        report["census"] = classification_census(n)
    if trees_path:
        with open(trees_path, "w") as fh:
            for base in bases:
                fh.write(base_to_tree(base, n).to_dot())
        report["trees"] = trees_path
    _emit(report, as_json, failed=False, started=started)


@main.command()
@click.option("-n", "n", type=int, required=True, help="Ground-set size.")
@click.option("--count-only", is_flag=True,
              help="Count the avoiding chains by path counting, without "
                   "materializing them (required at n=8 for speed).")
@click.option("--words", "show_words", is_flag=True,
              help="Include the parking words of the avoiding chains.")
@click.option("--json", "as_json", is_flag=True)
def chains(n: int, count_only: bool, show_words: bool, as_json: bool) -> None:
    """Maximal chains of the noncrossing lattice as parking functions,
    and the family avoiding the label n-1 (cap 3<=n<=8)."""
    started = time.monotonic()
    try:
        report: dict = {"command": "chains", "n": n,
                        "all_chains": n ** (n - 2),
                        "avoiding": count_D(n)}
        if not count_only:
            family = build_D(n)
            if len(family) != report["avoiding"]:
                raise AssertionError("chain count and enumeration disagree")
            if show_words:
                report["words"] = sorted(
                    "".join(map(str, chain_parking_word(c))) for c in family)
    except BuildError as exc:
        raise click.UsageError(str(exc))
    _emit(report, as_json, failed=False, started=started)


@main.command()
@click.option("-n", "n", type=int, required=True, help="Ground-set size.")
@click.option("--target", type=click.Choice(("nc", "pe-dref", "pe-pchn")),
              default="pe-dref", show_default=True)
@click.option("--scheme", type=click.Choice(("leftmod", "parking", "usual")),
              default="leftmod", show_default=True)
@click.option("--check-el", is_flag=True, help="Also verify the EL-property.")
@click.option("--dot", "dot_path", type=click.Path(dir_okay=False),
              help="Write the labeled Hasse diagram as DOT to this file.")
@click.option("--json", "as_json", is_flag=True)
def label(n: int, target: str, scheme: str, check_el: bool,
          dot_path: str | None, as_json: bool) -> None:
    """Edge labelings of a poset; optionally verify EL-shellability."""
    started = time.monotonic()
    poset = _build(target, n)
    lam = _labeling(target, n, poset, scheme)
    report: dict = {
        "command": "label", "target": target, "n": n, "scheme": scheme,
        "labels": {f"{poset.keys[i]} -> {poset.keys[j]}": v
                   for (i, j), v in sorted(lam.labels.items())},
    }
    failed = False
    if check_el:
        verdict = verify_el(poset, lam)
        report["el"] = verdict.el
        if verdict.witness:
            report["el_witness"] = verdict.witness
        failed = not verdict.el
    if dot_path:
        with open(dot_path, "w") as fh:
            fh.write(poset.to_dot(edge_labels=lam.labels))
        report["dot"] = dot_path
    _emit(report, as_json, failed=failed, started=started)


@main.command("probe-intervals")
@click.option("-n", "n", type=int, required=True, help="Ground-set size.")
@click.option("--lower", default=None,
              help="Lower endpoint, e.g. '1|23|4' (default: the atom with "
                   "block {n-2, n-1}).")
@click.option("--json", "as_json", is_flag=True)
def probe_intervals(n: int, lower: str | None, as_json: bool) -> None:
    """Cardinality of the interval [lower, top] in the PE family under
    dual refinement (membership filtering; no poset matrix needed)."""
    started = time.monotonic()
    try:
        members = pe_members(n)
        if lower is None:
            x = Atom(n - 2, n - 1).partition(n)
        else:
            x = parse_partition(lower, n)
        if x not in set(members):
            raise click.UsageError(f"{x} is not in the PE family for n={n}")
        count = sum(1 for z in members if x.leq_dref(z))
    except (BuildError, PartitionError) as exc:
        raise click.UsageError(str(exc))
    report = {"command": "probe-intervals", "n": n, "lower": str(x),
              "interval_size": count}
    _emit(report, as_json, failed=False, started=started)


if __name__ == "__main__":
    main()
