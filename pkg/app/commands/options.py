import sys
from typing import Optional

import click

from app.config.settings import settings
from app.dependencies import get_command_service
from app.docs.command_help import context_option_help, machine_option_help
from app.enums.command_enum import CommandEnum
from app.enums.output_mode_enum import OutputModeEnum
from app.schemas.run_config_schema import RunConfiguration


def algebra_option(func):
    return click.option(
        "--algebra", "algebra", required=True, type=click.Path(dir_okay=False),
        help="Algebra description file."
    )(func)


def context_option(func):
    return click.option("--context", "context", default=None, help=context_option_help)(func)


def machine_option(func):
    return click.option("--machine", "machine", is_flag=True, default=False, help=machine_option_help)(func)


def relation_budget_option(func):
    return click.option(
        "--max-relations", "max_relations", type=int, default=settings.max_relations, show_default=True,
        help="Budget of one relation enumeration."
    )(func)


def clone_budget_option(func):
    return click.option(
        "--clone-budget", "clone_budget", type=int, default=settings.clone_budget, show_default=True,
        help="Maximum number of term operations in one clone."
    )(func)


def sigma_budget_option(func):
    return click.option(
        "--sigma-budget", "sigma_budget", type=int, default=settings.sigma_budget, show_default=True,
        help="Node budget of the graph symmetry search."
    )(func)


def output_mode(machine: bool) -> OutputModeEnum:
    return OutputModeEnum.MACHINE if machine else OutputModeEnum.HUMAN


def run(command: CommandEnum, machine: bool, context: Optional[str] = None, **fields) -> None:
    """Validate the flags, run the command and exit with the status of its report."""
    config = RunConfiguration(command=command, context=context, output=output_mode(machine), **fields)
    outcome = get_command_service().run_command(config)
    for line in outcome.lines:
        click.echo(line)
    sys.exit(outcome.exit_code.value)
