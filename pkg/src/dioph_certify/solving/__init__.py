"""
Classification and certified solving.

Import from the submodules (``solution_types``, ``classifier``,
``case_solvers``, ``witness_validation``) or from the package root.
"""
