"""Exception hierarchy shared by every module and mapped to CLI exit codes."""

from __future__ import annotations


class TransDecompError(Exception):
    """Base class for all errors raised by this package."""


class InputError(TransDecompError, ValueError):
    """Malformed or mutually inconsistent input."""


class ResourceError(TransDecompError):
    """A search or closure exceeded its configured bound."""


class InvarianceError(InputError):
    """A generator maps a block (or line) onto something that is not a block."""

    def __init__(self, message: str, generator=None, block=None):
        super().__init__(message)
        self.generator = generator
        self.block = block


class HypothesisError(InputError):
    """A construction's hypothesis does not hold; ``witness`` shows why."""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class PartSplitError(TransDecompError):
    """An automorphism scatters one part of an edge partition over several parts."""

    def __init__(self, message: str, generator=None, part: int | None = None,
                 image_parts: tuple[int, ...] = ()):
        super().__init__(message)
        self.generator = generator
        self.part = part
        self.image_parts = image_parts


class PipelineError(TransDecompError):
    """A pipeline stage failed a check that cannot fail for correct code."""

    def __init__(self, stage: str, message: str):
        super().__init__(f"[{stage}] {message}")
        self.stage = stage
