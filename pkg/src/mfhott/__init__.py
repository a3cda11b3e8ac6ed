"""Two-level foundation toolchain: derivation checkers for the intensional
and extensional levels, translations into a small HoTT kernel, and
re-verification of every translated judgement."""

__version__ = "0.1.0"
