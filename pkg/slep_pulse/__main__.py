"""CLI entry point for the slep-pulse toolkit."""

from __future__ import annotations

import logging
import sys
import time
from typing import Any


def _configure_logging(verbose: bool) -> None:
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.INFO,
        format="%(asctime)s [%(levelname)s] %(name)s: %(message)s",
        stream=sys.stderr,
        force=True,
    )


def build_cli():
    """Click group with every subcommand."""
    import click

    def execute(ctx: click.Context, command: str, overrides: dict[str, Any]) -> None:
        from slep_pulse.commands import COMMANDS
        from slep_pulse.config import load_config
        from slep_pulse.domain.exceptions import SlepPulseException
        from slep_pulse.presentation import ResultWriter, build_manifest, write_manifest

        logger = logging.getLogger("slep_pulse")
        options = ctx.obj
        cli_overrides = {
            "run.out": options["out"],
            "run.threads": options["threads"],
            "run.seed": options["seed"],
            "run.verbose": options["verbose"],
            **overrides,
        }
        try:
            app_config = load_config(config_path=options["config"], cli_overrides=cli_overrides)
            _configure_logging(app_config.run.verbose)
            if app_config.run.threads < 1:
                raise click.UsageError("--threads must be at least 1")

            started = time.perf_counter()
            writer = ResultWriter(app_config.run.out)
            summary = COMMANDS[command](app_config, writer)
            manifest = build_manifest(
                command, app_config.as_dict(), writer.files, writer.out_dir, time.perf_counter() - started
            )
            write_manifest(manifest, writer.out_dir)
        except SlepPulseException as exc:
            click.echo(f"Error: {exc}", err=True)
            sys.exit(exc.exit_code)
        except click.UsageError:
            raise
        except Exception as exc:  # noqa: BLE001
            logger.exception("unexpected failure in %s", command)
            click.echo(f"Error: {exc}", err=True)
            sys.exit(4)

        for key, value in summary.items():
            click.echo(f"{key}: {value}")

    @click.group()
    @click.option("--config", "-c", default=None, help="Config file (.yml/.yaml or flat key=value)")
    @click.option("--out", "-o", default=None, help="Output directory (overrides config/env)")
    @click.option("--threads", type=int, default=None, help="Worker threads (overrides config/env)")
    @click.option("--seed", type=int, default=None, help="Perturbation seed (overrides config/env)")
    @click.option("--verbose", "-v", is_flag=True, default=None, help="Enable debug logging")
    @click.pass_context
    def cli(
        ctx: click.Context,
        config: str | None,
        out: str | None,
        threads: int | None,
        seed: int | None,
        verbose: bool | None,
    ) -> None:
        """Standing pulses, SLEP stability and bifurcations of a
        three-component activator-inhibitor system.

        Configuration priority: config file < env vars (SLEPPULSE_*) < CLI arguments.
        """
        ctx.obj = {"config": config, "out": out, "threads": threads, "seed": seed, "verbose": verbose}

    @cli.command()
    @click.pass_context
    def pulse(ctx: click.Context) -> None:
        """Composite pulse profile (x, u, v, w)."""
        execute(ctx, "pulse", {})

    @cli.command()
    @click.option("--psi-count", type=int, default=None, help="Number of psi samples on the Hopf curve")
    @click.option("--region-grid", type=int, default=None, help="Region grid size per axis (0 disables)")
    @click.pass_context
    def diagram(ctx: click.Context, psi_count: int | None, region_grid: int | None) -> None:
        """Drift line, Hopf curve, codimension-two points and region labels."""
        execute(ctx, "diagram", {"diagram.psi_count": psi_count, "diagram.region_grid": region_grid})

    @cli.command()
    @click.option("--psi", type=float, default=None, help="Ray angle in (0, pi/2)")
    @click.option("--s-min", type=float, default=None)
    @click.option("--s-max", type=float, default=None)
    @click.pass_context
    def trace(ctx: click.Context, psi: float | None, s_min: float | None, s_max: float | None) -> None:
        """Path of the critical even-mode eigenvalues along a ray."""
        execute(ctx, "trace", {"trace.psi": psi, "trace.s_min": s_min, "trace.s_max": s_max})

    @cli.command()
    @click.option("--tau-hat", type=float, default=None)
    @click.option("--theta-hat", type=float, default=None)
    @click.option("--t-end", type=float, default=None)
    @click.pass_context
    def simulate(ctx: click.Context, tau_hat: float | None, theta_hat: float | None, t_end: float | None) -> None:
        """Time integration with zero-contour tracking and a dynamics label."""
        execute(
            ctx,
            "simulate",
            {"regime.tau_hat": tau_hat, "regime.theta_hat": theta_hat, "simulation.t_end": t_end},
        )

    @cli.command()
    @click.option("--discrete/--no-discrete", default=None, help="Also run the finite-difference eigensolver")
    @click.pass_context
    def spectrum(ctx: click.Context, discrete: bool | None) -> None:
        """Dispersion curves, essential-spectrum bound and critical eigenvalues."""
        execute(ctx, "spectrum", {"spectrum.discrete": discrete})

    @cli.command()
    @click.option("--mode", type=click.Choice(["classify", "simulate"]), default=None)
    @click.pass_context
    def sweep(ctx: click.Context, mode: str | None) -> None:
        """Region labels or simulations over a list of (tau_hat, theta_hat) points."""
        execute(ctx, "sweep", {"sweep.mode": mode})

    @cli.command()
    @click.argument("directory", type=click.Path(exists=True, file_okay=False))
    def verify(directory: str) -> None:
        """Recompute the digests listed in DIRECTORY/manifest.yml."""
        from slep_pulse.presentation import verify_manifest

        problems = verify_manifest(directory)
        for problem in problems:
            click.echo(problem, err=True)
        if problems:
            sys.exit(4)
        click.echo("manifest ok")

    return cli


def main() -> None:
    try:
        import click  # noqa: F401
    except ImportError:
        print("Error: 'click' package is required. Install with: pip install click", file=sys.stderr)
        sys.exit(1)

    build_cli()()


if __name__ == "__main__":
    main()
