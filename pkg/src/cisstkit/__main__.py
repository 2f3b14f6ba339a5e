"""cisstkit CLI entrypoint for python -m cisstkit."""

from cisstkit.cli import cli

if __name__ == "__main__":
    cli()
