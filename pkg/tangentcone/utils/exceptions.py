class TangentConeError(Exception):
    pass


class InputError(TangentConeError):
    """Malformed input or a violated precondition (exit status 2)."""
    pass


class ParseError(InputError):
    def __init__(self, message, line=None, source=None):
        self.line = line
        self.source = source
        location = ''
        if source:
            location = f"{source}:"
        if line is not None:
            location = f"{location}{line}: "
        elif location:
            location = f"{location} "
        super().__init__(f"{location}{message}")


class DimensionMismatchError(InputError):
    pass


class PreconditionError(InputError):
    def __init__(self, violations):
        if isinstance(violations, str):
            violations = [violations]
        self.violations = list(violations)
        super().__init__('; '.join(self.violations))


class InfeasibleError(TangentConeError):
    """The mathematics says no (exit status 1)."""
    pass


class ConeTestFailure(InfeasibleError):
    def __init__(self, report):
        self.report = report
        super().__init__('direction fails the necessary tangent cone test')


class ObstructionInfeasible(InfeasibleError):
    def __init__(self, stage, detail=''):
        self.stage = stage
        self.detail = detail
        super().__init__(f"linear system infeasible at stage {stage}")
