import numpy as np


class XcboError(Exception):
    pass


class InvalidInput(XcboError, ValueError):

    def __init__(self, message='Input is invalid.'):
        super().__init__(message)


class OutOfDomain(XcboError, ValueError):

    def __init__(self, message='Input is outside of the domain.'):
        super().__init__(message)


class UnknownFunction(XcboError, ValueError):

    def __init__(self, name):
        self.name = name
        super().__init__(f'Unknown function `{name}`')


class NonPositiveDefinite(XcboError, np.linalg.LinAlgError):
    pass


class ExhaustedCandidates(XcboError, RuntimeError):
    pass


class GridError(XcboError, ValueError):
    pass


class DegenerateResponse(UserWarning):
    """Emitted when a surrogate is fitted to a constant response."""
