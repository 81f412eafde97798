import logging
import sys
from functools import wraps

import click
from pydantic import ValidationError

from app.enums.exit_code_enum import ExitCodeEnum
from app.utils.exceptions import BudgetExceededError, WorkbenchError

logger = logging.getLogger(__name__)

INTERNAL_ERROR = "Error: internal error: {}: {}"


def handle_cli_exceptions(func):
    @wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except BudgetExceededError as error:
            click.echo(f"Budget exceeded: {error}", err=True)
            sys.exit(ExitCodeEnum.INCONCLUSIVE.value)
        except WorkbenchError as error:
            click.echo(f"Error: {error}", err=True)
            sys.exit(ExitCodeEnum.USAGE.value)
        except ValidationError as error:
            for problem in error.errors():
                location = ".".join(str(part) for part in problem["loc"])
                prefix = f"{location}: " if location else ""
                click.echo(f"Error: {prefix}{problem['msg']}", err=True)
            sys.exit(ExitCodeEnum.USAGE.value)
        except OSError as error:
            logger.debug("I/O failure", exc_info=True)
            click.echo(f"Error: {error}", err=True)
            sys.exit(ExitCodeEnum.USAGE.value)
        except (click.exceptions.ClickException, click.exceptions.Exit, click.exceptions.Abort):
            raise
        except Exception as error:
            # exit 1 is reserved for counterexamples
            logger.debug("Unexpected failure", exc_info=True)
            click.echo(INTERNAL_ERROR.format(type(error).__name__, error), err=True)
            sys.exit(ExitCodeEnum.USAGE.value)
    return wrapper
