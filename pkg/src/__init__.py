"""coinv - exact invariant and coinvariant cohomology of group actions and periodic covers."""

__version__ = "0.1.0"
