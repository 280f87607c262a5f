"""
Exceptions raised by pdgcalc. Everything derives from :class:`PdgError` so
that the command line can tell domain failures from usage mistakes.
"""


class PdgError(Exception):
    """
    Base class for every error raised on purpose by this package
    """
    pass


class ModelError(PdgError):
    """
    Exception for an ill-formed model or a generator the model does not have
    """
    pass


class ModelMismatchError(PdgError):
    """
    Exception for combining elements that belong to different models
    """
    pass


class InvalidArgumentError(PdgError):
    """
    Exception for arguments outside an operation's domain, like dividing by 0
    """
    pass


class ParseError(PdgError):
    """
    Exception for text that does not follow the published grammars

    Args:
        message (str): what went wrong
        line (int): 1-based line of the offending token
        column (int): 1-based column of the offending token
    """

    def __init__(self, message, line=1, column=1):
        super().__init__("{} at line {}, column {}".format(
            message, line, column))
        self.message = message
        self.line = line
        self.column = column


class ModelFileError(PdgError):
    """
    Exception for a model file we fail to read
    """

    def __init__(self, message, lineno=0):
        super().__init__("{} (line {})".format(message, lineno)
                         if lineno else message)
        self.lineno = lineno


class RegionError(PdgError):
    """
    Exception for a region that is not contained in a function's domain
    """
    pass


class ExtensionError(PdgError):
    """
    Base class for failed model constructions
    """
    pass


class InvalidPlanError(ExtensionError):
    """
    Exception for an extension plan with a bad cut index or out of order
    """
    pass


class BetweenChainsError(ExtensionError):
    """
    Exception for a gap between two chains, which needs a new Z-chain rather
    than a loose class
    """
    pass


class MonotonicityError(ExtensionError):
    """
    Exception for a successor choice that would break monotonicity of chi
    """
    pass


class NotInSubmodelError(ExtensionError):
    """
    Exception for an element that already lies in the span of the submodel,
    or a submodel that is not a substructure of the ambient model
    """
    pass
