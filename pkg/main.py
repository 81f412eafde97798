import logging
import sys

import click

from app.commands.audit_commands import audit, check_identities, check_relation
from app.commands.term_commands import congruences, find_terms
from app.config.settings import settings


@click.group(
    help="Star-relation calculus workbench: star-symmetry, star-permutability and term search on finite algebras."
)
@click.option("--verbose", "-v", is_flag=True, default=False, help="Log progress to stderr.")
def cli(verbose: bool):
    logging.basicConfig(
        stream=sys.stderr,
        level=logging.DEBUG if verbose else settings.log_level.upper(),
        format="%(levelname)s %(name)s: %(message)s",
    )


cli.add_command(audit)
cli.add_command(check_relation)
cli.add_command(check_identities)
cli.add_command(find_terms)
cli.add_command(congruences)

if __name__ == "__main__":
    cli()
