"""Backend package.
- domain: set systems, games and their values
- axioms: executable axiom checks
- experiments: census and value-distance experiments
- ingest, persistence, reporting: files in and out
"""
