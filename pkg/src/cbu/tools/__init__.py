from ._base_recognition_tool import BaseRecognitionTool, error_handler

from ._slot_dag import SlotDag
from ._source_merge import SourceMerge
from ._branch_and_prune import BranchAndPrune
from ._exhaustive_search import ExhaustiveSearch
from ._c5_homomorphism import C5Homomorphism


__all__ = [
    "BaseRecognitionTool",  # public API, for advanced usage (own tool)
    "SlotDag",
    "SourceMerge",
    "BranchAndPrune",
    "ExhaustiveSearch",
    "C5Homomorphism",
]

# recognition tools table grouped by method:
# {options.method -> {options.tool -> BaseRecognitionTool}}
recognition_tools_table = {
    "recognition": {
        "cbu.branch_and_prune": BranchAndPrune,
        "cbu.exhaustive": ExhaustiveSearch,
        "cbu.c5_homomorphism": C5Homomorphism,
    },
    "labeling": {
        "cbu.slot_dag": SlotDag,
        "cbu.source_merge": SourceMerge,
    },
}

# tools suggest table grouped by method: {options.method -> [options.tool]}
# NOTE: the default tool of a method is the first one listed here
tool_suggest_table = {k: list(val.keys()) for k, val in recognition_tools_table.items()}

# tools dispatch table: {options.tool -> BaseRecognitionTool}
tool_dispatch_table = {
    k: val for values in recognition_tools_table.values() for k, val in values.items()
}

# all solving methods: {options.method}
solving_methods = set(recognition_tools_table.keys())
