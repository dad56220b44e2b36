"""Kleshchev crystals, Fock space canonical bases and Grothendieck-level branching checks."""

__version__ = "0.1.0"
