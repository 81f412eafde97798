from typing import Optional

import click

from app.commands.options import (
    algebra_option,
    clone_budget_option,
    context_option,
    machine_option,
    run,
    sigma_budget_option,
)
from app.docs.command_help import congruences_help, find_terms_help
from app.enums.command_enum import CommandEnum
from app.enums.term_kind_enum import TermKindEnum
from app.utils.cli_exceptions import handle_cli_exceptions


@click.command(CommandEnum.FIND_TERMS.value, help=find_terms_help)
@algebra_option
@click.option(
    "--kind", "kind", required=True,
    type=click.Choice([kind.value for kind in TermKindEnum]),
    help="Which terms to search for."
)
@context_option
@clone_budget_option
@sigma_budget_option
@machine_option
@handle_cli_exceptions
def find_terms(
    algebra: str,
    kind: str,
    context: Optional[str],
    clone_budget: int,
    sigma_budget: int,
    machine: bool
):
    run(
        CommandEnum.FIND_TERMS,
        machine,
        context,
        algebra=algebra,
        kind=TermKindEnum(kind),
        clone_budget=clone_budget,
        sigma_budget=sigma_budget,
    )


@click.command(CommandEnum.CONGRUENCES.value, help=congruences_help)
@algebra_option
@machine_option
@handle_cli_exceptions
def congruences(algebra: str, machine: bool):
    run(CommandEnum.CONGRUENCES, machine, algebra=algebra)
