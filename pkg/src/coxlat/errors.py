"""Exception hierarchy shared by every coxlat module."""


class CoxlatError(Exception):
    """Base class for domain errors; the CLI maps these to exit code 1."""

    @property
    def case(self) -> str:
        return type(self).__name__


class NotFinite(CoxlatError):
    pass


class UnsupportedField(CoxlatError):
    pass


class SystemMismatch(CoxlatError):
    pass


class NotMinimalRep(CoxlatError):
    pass


class CharacterizationMismatch(CoxlatError):
    """Two characterizations of the facial order disagree (an implementation bug)."""


class InvalidProjections(CoxlatError):
    pass


class Contracted(CoxlatError):
    pass


class NotCoxeterElement(CoxlatError):
    pass


class FiberMismatch(CoxlatError):
    pass


class NotTypeA(CoxlatError):
    pass


class SchemaError(CoxlatError):
    pass


class ParseError(CoxlatError):
    pass
