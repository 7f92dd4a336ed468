"""
Helpers for the on-disk artifacts every subcommand produces: stores, indexes, run files and reports.

Outputs are written under a ``.partial`` location and only moved into place once the whole step has succeeded, so a
failed run never leaves a half written store behind. A ``.lock`` file in the output directory stops two runs writing
to the same place.
"""
import hashlib
import json
import logging
import os
import shutil
from collections.abc import Iterable, Iterator
from contextlib import contextmanager
from pathlib import Path

from QueryExpansion.common.errors import OutputLocked, StoreFormatError

logger = logging.getLogger('qe.artifacts')

MANIFEST = 'manifest.json'
LOCK = '.lock'


def dump_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, ensure_ascii=False, separators=(',', ':'))


def sha256_file(path: Path) -> str:
    h = hashlib.sha256()
    with open(path, 'rb') as f:
        for chunk in iter(lambda: f.read(1 << 16), b''):
            h.update(chunk)
    return h.hexdigest()


def write_jsonl(path: Path, rows: Iterable) -> int:
    count = 0
    with open(path, 'w', encoding='utf-8') as f:
        for row in rows:
            f.write(dump_json(row))
            f.write('\n')
            count += 1
    return count


def read_jsonl(path: Path) -> Iterator:
    with open(path, encoding='utf-8') as f:
        for lineno, line in enumerate(f, start=1):
            if not line.strip():
                continue
            try:
                yield json.loads(line)
            except json.JSONDecodeError as e:
                raise StoreFormatError(f'{path}:{lineno}: invalid JSON line, {e}') from e


def write_manifest(directory: Path, fmt: str, version: int, files: Iterable[str], **extra):
    manifest = {
        'format': fmt,
        'version': version,
        'files': {name: sha256_file(directory / name) for name in sorted(files)},
        **extra,
    }
    (directory / MANIFEST).write_text(json.dumps(manifest, sort_keys=True, indent=2) + '\n', encoding='utf-8')
    return manifest


def read_manifest(directory: Path, fmt: str, version: int, verify: bool = True) -> dict:
    path = Path(directory) / MANIFEST
    if not path.exists():
        raise StoreFormatError(f'{directory} is not a {fmt} store, {MANIFEST} is missing')
    try:
        manifest = json.loads(path.read_text(encoding='utf-8'))
    except json.JSONDecodeError as e:
        raise StoreFormatError(f'{path}: invalid manifest, {e}') from e
    if manifest.get('format') != fmt:
        raise StoreFormatError(f'{directory} holds a "{manifest.get("format")}" store, expected "{fmt}"')
    if manifest.get('version') != version:
        raise StoreFormatError(f'{directory}: unsupported {fmt} version {manifest.get("version")}, expected {version}')
    if verify:
        for name, digest in manifest['files'].items():
            file_path = Path(directory) / name
            if not file_path.exists():
                raise StoreFormatError(f'{directory}: {name} listed in the manifest is missing')
            if sha256_file(file_path) != digest:
                raise StoreFormatError(f'{directory}: checksum mismatch for {name}')
    return manifest


@contextmanager
def output_lock(directory: Path):
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    lock = directory / LOCK
    try:
        fd = os.open(lock, os.O_CREAT | os.O_EXCL | os.O_WRONLY)
    except FileExistsError as e:
        raise OutputLocked(f'{directory} is in use by another run, remove {lock} if that run has died') from e
    try:
        os.write(fd, str(os.getpid()).encode())
        os.close(fd)
        yield directory
    finally:
        lock.unlink(missing_ok=True)


@contextmanager
def staged_directory(target: Path):
    """
    Yields a fresh ``<target>.partial`` directory which replaces ``target`` when the block exits cleanly.
    """
    target = Path(target)
    partial = target.with_name(target.name + '.partial')
    if partial.exists():
        shutil.rmtree(partial)
    partial.mkdir(parents=True)
    try:
        yield partial
    except BaseException:
        shutil.rmtree(partial, ignore_errors=True)
        raise
    if target.exists():
        shutil.rmtree(target)
    partial.rename(target)
    logger.debug('moved %s into place', target)


class StagedFiles:
    def __init__(self, directory: Path):
        self.directory = Path(directory)
        self.partial = self.directory / '.partial'
        self.names: list[str] = []

    def path(self, name: str) -> Path:
        if name not in self.names:
            self.names.append(name)
        p = self.partial / name
        p.parent.mkdir(parents=True, exist_ok=True)
        return p

    def commit(self) -> list[Path]:
        final = []
        for name in self.names:
            dest = self.directory / name
            dest.parent.mkdir(parents=True, exist_ok=True)
            os.replace(self.partial / name, dest)
            final.append(dest)
        shutil.rmtree(self.partial, ignore_errors=True)
        return final


@contextmanager
def staged_files(directory: Path):
    """
    Yields a ``StagedFiles``; every file requested through it is written under ``.partial`` and moved into
    ``directory`` only if the block completes.
    """
    staged = StagedFiles(directory)
    if staged.partial.exists():
        shutil.rmtree(staged.partial)
    staged.partial.mkdir(parents=True)
    try:
        yield staged
    except BaseException:
        shutil.rmtree(staged.partial, ignore_errors=True)
        raise
    staged.commit()
