"""Command modules; each exposes setup(cli) and is loaded by ReconCLI."""
