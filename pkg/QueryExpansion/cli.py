"""
Single entry point for the pipeline subcommands, ``python -m QueryExpansion <subcommand> [flags]``.
"""
import os
import sys
from collections.abc import Sequence

SUBCOMMANDS = {
    'ingest-wiki': 'ingest_wiki',
    'ingest-wordnet': 'ingest_wordnet',
    'expand': 'expand',
    'index': 'index',
    'search': 'search',
    'eval': 'eval',
    'sweep': 'sweep',
}
USAGE = f'usage: python -m QueryExpansion {{{",".join(SUBCOMMANDS)}}} [options]\n'


def run_subcommand(argv: Sequence[str], stdout=None, stderr=None) -> int:
    """
    Runs one subcommand and returns its exit code: 0 on success, 1 when it fails and 2 for an unknown subcommand.
    """
    stderr = stderr or sys.stderr
    if not argv or argv[0] not in SUBCOMMANDS:
        stderr.write(f'unknown subcommand {argv[0]!r}\n' if argv else 'no subcommand given\n')
        stderr.write(USAGE)
        return 2

    os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'QueryExpansion.settings')
    import django
    from django.core.management import CommandError, call_command

    django.setup()
    try:
        call_command(SUBCOMMANDS[argv[0]], *argv[1:], stdout=stdout or sys.stdout, stderr=stderr)
    except CommandError as e:
        stderr.write(f'{argv[0]}: error: {e}\n')
        return 1
    return 0
