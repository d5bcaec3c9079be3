class DomainError(ValueError):
    """Input outside an operation's domain (negative dominant, non-lattice congruence, ...)."""


class InconsistencyError(RuntimeError):
    """An internal invariant failed; points at a transcription or reflection bug."""
