from typing import Optional, Tuple

import click

from app.commands.options import (
    algebra_option,
    context_option,
    machine_option,
    relation_budget_option,
    run,
)
from app.docs.command_help import (
    audit_help,
    check_identities_help,
    check_relation_help,
    property_option_help,
)
from app.enums.command_enum import CommandEnum
from app.enums.relation_property_enum import RelationPropertyEnum
from app.utils.cli_exceptions import handle_cli_exceptions


@click.command(CommandEnum.AUDIT.value, help=audit_help)
@algebra_option
@context_option
@relation_budget_option
@machine_option
@handle_cli_exceptions
def audit(algebra: str, context: Optional[str], max_relations: int, machine: bool):
    run(CommandEnum.AUDIT, machine, context, algebra=algebra, max_relations=max_relations)


@click.command(CommandEnum.CHECK_RELATION.value, help=check_relation_help)
@algebra_option
@click.option("--relation", "relation", required=True, type=click.Path(dir_okay=False), help="Relation description file.")
@context_option
@click.option(
    "--property", "properties", multiple=True,
    type=click.Choice([prop.value for prop in RelationPropertyEnum]),
    help=property_option_help
)
@machine_option
@handle_cli_exceptions
def check_relation(
    algebra: str,
    relation: str,
    context: Optional[str],
    properties: Tuple[str, ...],
    machine: bool
):
    run(
        CommandEnum.CHECK_RELATION,
        machine,
        context,
        algebra=algebra,
        relation=relation,
        properties=[RelationPropertyEnum(prop) for prop in properties],
    )


@click.command(CommandEnum.CHECK_IDENTITIES.value, help=check_identities_help)
@algebra_option
@context_option
@relation_budget_option
@machine_option
@handle_cli_exceptions
def check_identities(algebra: str, context: Optional[str], max_relations: int, machine: bool):
    run(CommandEnum.CHECK_IDENTITIES, machine, context, algebra=algebra, max_relations=max_relations)
