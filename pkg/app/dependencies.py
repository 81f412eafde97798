from app.config.settings import settings
from app.services.algebra_service import AlgebraService
from app.services.checker_service import CheckerService
from app.services.command_service import CommandService
from app.services.context_service import ContextService
from app.services.identity_service import IdentityService
from app.services.law_service import LawService
from app.services.parser_service import ParserService
from app.services.relation_service import RelationService
from app.services.report_service import ReportService
from app.services.term_service import TermService


def get_algebra_service() -> AlgebraService:
    return AlgebraService(
        max_congruence_size=settings.max_congruence_size,
        max_power_size=settings.max_power_size,
        max_table_size=settings.max_table_size,
    )


def get_checker_service(algebra_service: AlgebraService) -> CheckerService:
    context_service = ContextService(algebra_service)
    return CheckerService(
        algebra_service,
        context_service,
        RelationService(context_service),
        settings.max_relations,
        settings.sigma_budget,
    )


def get_term_service(algebra_service: AlgebraService) -> TermService:
    return TermService(algebra_service, IdentityService(), settings.clone_budget, settings.max_table_size)


def get_command_service() -> CommandService:
    algebra_service = get_algebra_service()
    checker_service = get_checker_service(algebra_service)
    law_service = LawService(
        algebra_service,
        checker_service.context_service,
        checker_service.relation_service,
        checker_service,
        settings.max_relations,
    )
    return CommandService(
        ParserService(),
        algebra_service,
        checker_service.context_service,
        checker_service.relation_service,
        checker_service,
        get_term_service(algebra_service),
        law_service,
        ReportService(),
    )
