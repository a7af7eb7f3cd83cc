from spacesweep.budget.bit_budget import BitBudget, Allocation, BudgetExceeded, alloc, words
from spacesweep.budget.bit_vector import BitVector, RankSelect
