"""User-facing message catalog for the command line."""

PROGRAM = {
    "name": "igv",
    "description": "Values, uniqueness and axiom checks for incomplete cooperative games.",
}

PROGRESS = {
    "census": "Classifying set systems for n={n}...",
    "experiment": "Evaluating {count} set systems with {games} games each...",
    "pilot": "Sizing the experiment from {count} pilot systems...",
}

RESULTS = {
    "unique": "unique",
    "not_unique": "non-unique",
    "uniqueness_detail": "intersection_closed: {closed}; grand_coalition: {grand}",
    "ranks": "rank_a: {rank_a}; rank_stacked: {rank_stacked}; rows: {rows}; columns: {columns}",
    "oracle": "oracle: {verdict}",
    "audit_line": "{axiom:<24} {kind:<3} {status:<12} {discrepancy}",
    "audit_summary": "{checks} checks, {violated} violated, {inapplicable} inapplicable",
    "systems": "Systems evaluated: {evaluated}; skipped: {skipped}",
    "rank_line": "{series:<6} {counts} tied systems: {tied}",
    "sample_plan": "Pilot standard deviation {sd:.6f} gives sample size {size}",
    "family": "Unique non-closed systems match the symmetric family: {matches}",
}

COMPLETION = {
    "wrote": "Wrote {path}",
    "run_id": "Run ID: {run_id}",
}

ERRORS = {
    "invalid_input": {
        "title": "Invalid input.",
        "next_step": "Check the arguments and try again.",
    },
    "exhaustive_limit": {
        "title": "Too many players for exhaustive enumeration.",
        "next_step": "Use --samples, or raise enumeration.exhaustive_limit in the configuration.",
    },
    "not_intersection_closed": {
        "title": "Set system is not intersection-closed.",
        "next_step": "This value is only defined on intersection-closed set systems.",
    },
    "grand_coalition_missing": {
        "title": "Grand coalition is unknown.",
        "next_step": "Add the worth of the grand coalition to the game.",
    },
    "not_p_extendable": {
        "title": "Game has no positive extension.",
        "next_step": "Expected values need a game whose surpluses are all non-negative.",
    },
    "ud_not_unique": {
        "title": "UD-value is not unique on this set system.",
        "next_step": "Run `igv uniqueness` on the system for the rank details.",
    },
    "parse_error": {
        "title": "Game file could not be read.",
        "next_step": "Fix the listed lines and try again.",
    },
    "invalid_config": {
        "title": "Configuration is invalid.",
        "next_step": "Check the file given by --config or IGV_CONFIG.",
    },
    "plot_input": {
        "title": "CSV cannot be plotted.",
        "next_step": "Plot a report written by `igv experiment`.",
    },
    "unexpected": {
        "title": "Unexpected error.",
        "next_step": "See the run log for details.",
    },
}
