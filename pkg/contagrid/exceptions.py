# -*- coding: utf-8 -*-
# SPDX-License-Identifier: Apache-2.0
"""Custom exceptions for the contamination engine"""


class FailedStep(Exception):
    """Generic non-specific exception"""
    pass


class InputNotValid(Exception):
    """Exception on malformed dims, cells, seeds or out-of-domain arguments"""
    pass


class BudgetExceeded(Exception):
    """Exception on a search whose candidate space is larger than the allowed budget"""

    def __init__(self, candidates: int, budget: int):
        super().__init__(f'Search needs {candidates} candidates, budget is {budget}. '
                         f'Raise the budget with CONTAGRID_BUDGET or force the run.')
        self.candidates = candidates
        self.budget = budget


class PruneNotApplicable(Exception):
    """Exception on a prune configuration that does not fit the grid"""
    pass


class StructureError(Exception):
    """Exception on a solution that does not have the shape an encoding requires"""
    pass


class FailedVerification(Exception):
    """Exception on a proved claim that did not hold"""
    pass
