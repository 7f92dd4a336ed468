import sys

from QueryExpansion.cli import run_subcommand

if __name__ == '__main__':
    sys.exit(run_subcommand(sys.argv[1:]))
