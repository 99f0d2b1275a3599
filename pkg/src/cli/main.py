"""Main CLI entry point using Invoke framework."""

import sys
from dataclasses import replace
from pathlib import Path

from invoke.collection import Collection
from invoke.program import Program
from invoke.tasks import task

from cli.runner import CommandRequest, run
from config.parser import ConfigurationParser
from utils.helpers import ErrorCode, MwlabError, configure_logging

__version__ = "0.1.0"


def _execute(
    verb: str,
    code: str | None,
    also: list[str] | None,
    out: str | None,
    seed=None,
    count=None,
    budget=None,
    **params,
) -> None:
    """Load settings, run one verb and print its report.

    Exits with 1 when an identity fails and 2 on input errors.
    """
    try:
        parser = ConfigurationParser()
        parser.load()

        validation_result = parser.validate()
        if not validation_result.valid:
            print("✗ Configuration validation failed:")
            for error in validation_result.errors:
                print(f"  - {error}")
            sys.exit(ErrorCode.INPUT_ERROR.value)

        settings = parser.settings()
        configure_logging(settings.log_level)
        for warning in validation_result.warnings:
            print(f"⚠ {warning}", file=sys.stderr)

        if budget is not None:
            cap = _int_option("budget", budget)
            settings = replace(
                settings, enumeration_budget=cap, transform_budget=cap, series_budget=cap
            )
        fmt = out or "json"
        if fmt not in ("json", "csv"):
            raise MwlabError(f"Unknown output format: {fmt}", suggestion="Use --out json or --out csv")

        inputs = tuple(Path(p) for p in ([code] if code else []) + list(also or []))
        request = CommandRequest(
            verb=verb,
            inputs=inputs,
            params={k: (None if v is None else str(v)) for k, v in params.items()},
            seed=None if seed is None else _int_option("seed", seed),
            count=20 if count is None else _int_option("count", count),
        )
        exit_code, report = run(request, settings)
        print(report.render(fmt))
        if exit_code != ErrorCode.SUCCESS:
            sys.exit(exit_code.value)

    except MwlabError as e:
        print(f"✗ {e.message}")
        if e.suggestion:
            print(f"  → {e.suggestion}")
        sys.exit(e.code.value)


def _int_option(name: str, raw) -> int:
    try:
        return int(raw)
    except (TypeError, ValueError):
        raise MwlabError(f"--{name} expects an integer, got: {raw}")


@task
def version(c):
    """Show version information."""
    print(f"mwlab {__version__}")


@task
def code_info(c, code, out=None):
    """Show field, dimension, enumerator and minimum distance of a code."""
    _execute("code-info", code, None, out)


@task(iterable=["also"])
def enum(c, code, also=None, m=None, budget=None, out=None):
    """Weight enumerator of a code, or effective-length enumerator of a tuple."""
    _execute("enum", code, also, out, budget=budget, m=m)


@task(iterable=["also"])
def verify_macwilliams(c, code, also=None, m=None, budget=None, out=None):
    """Brute-force dual enumerator against the MacWilliams transform."""
    _execute("verify-macwilliams", code, also, out, budget=budget, m=m)


@task(iterable=["also"])
def ft_check(c, code, also=None, m=None, z=None, budget=None, out=None):
    """Fourier transform of the characteristic function and of z^ew."""
    _execute("ft-check", code, also, out, budget=budget, m=m, z=z)


@task(iterable=["also"])
def poisson_check(c, code, also=None, m=None, z=None, seed=None, budget=None, out=None):
    """Finite Poisson summation over a code tuple and its dual."""
    _execute("poisson-check", code, also, out, seed, budget=budget, m=m, z=z)


@task
def dist(c, code, z=None, budget=None, out=None):
    """MacWilliams and coset distributions at z."""
    _execute("dist", code, None, out, budget=budget, z=z)


@task
def smooth(c, code, eps=None, tol=None, budget=None, out=None):
    """Smoothing parameter by bisection, with the closed-form lower bound."""
    _execute("smooth", code, None, out, budget=budget, eps=eps, tol=tol)


@task
def prop31(c, code, z=None, budget=None, out=None):
    """Statistical distance of the coset distribution from uniform against S(z)/2."""
    _execute("prop31", code, None, out, budget=budget, z=z)


@task
def lattice_nu(c, code, z=None, tol=None, terms=None, budget=None, out=None):
    """Nu-series of A(C): closed form, truncated enumeration and shell counts."""
    _execute("lattice-nu", code, None, out, budget=budget, z=z, tol=tol, terms=terms)


@task
def lattice_theta(c, code, terms=None, budget=None, out=None):
    """Theta coefficients of A(C) by enumeration and by substitution."""
    _execute("lattice-theta", code, None, out, budget=budget, terms=terms)


@task
def theorem3(c, code, u=None, beta=None, tol=None, budget=None, out=None):
    """Lattice MacWilliams identity, exact in u = tanh(beta) or numeric in beta."""
    _execute("theorem3", code, None, out, budget=budget, u=u, beta=beta, tol=tol)


@task
def jacobi_poisson(c, code, t=None, tol=None, budget=None, out=None):
    """Gaussian sums over A(C)* and A(C) at imaginary argument."""
    _execute("jacobi-poisson", code, None, out, budget=budget, t=t, tol=tol)


@task
def suite(c, verb, seed=None, count=None, q=None, n=None, budget=None, out=None):
    """Seeded random suite of one verb; case i draws from seed + i.

    -q and -n pin the field size and code length of every case.
    """
    _execute(verb, None, None, out, 0 if seed is None else seed, count, budget, q=q, n=n)


# Create program directly with namespace
program = Program(namespace=Collection.from_module(sys.modules[__name__]), version=__version__)


if __name__ == "__main__":
    program.run()
