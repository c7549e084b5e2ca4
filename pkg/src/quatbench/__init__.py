"""Quaternary adder workbench.

Behavioral models of published quaternary adder designs, exhaustive
verification against arithmetic oracles, transistor-cost reproduction of
the published comparison tables, and a machine-checked errata report —
exposed as a library, an HTTP service and a command-line client.
"""

__version__ = "0.1.0"
