#!/usr/bin/env python3
"""
Build script for liequiver - packs the command line into one executable.

Usage:
    python build.py              # Executable, smoke test and release archive
    python build.py --no-archive # Executable and smoke test only
    python build.py --clean      # Remove dist/, build/ and the generated .spec
"""

import argparse
import importlib.util
import platform
import shutil
import subprocess
import sys
from pathlib import Path

from config.settings import APP_NAME, VERSION

# Locations
PROJECT_ROOT = Path(__file__).parent.absolute()
DIST_DIR = PROJECT_ROOT / 'dist'
BUILD_DIR = PROJECT_ROOT / 'build'
ENTRY_SCRIPT = PROJECT_ROOT / 'liequiver.py'
GENERATED_SPEC = PROJECT_ROOT / f'{APP_NAME}.spec'

# Target platform
SYSTEM = platform.system()
IS_WINDOWS = SYSTEM == 'Windows'
EXECUTABLE = DIST_DIR / (f'{APP_NAME}.exe' if IS_WINDOWS else APP_NAME)

# sympy and networkx import most of themselves lazily
COLLECTED_PACKAGES = ['sympy', 'networkx']

# Commands run against the finished executable, with text their output must contain
SMOKE_CHECKS = [
    (['--version'], f"{APP_NAME} {VERSION}"),
    (['families', '--xi', '6,5', '--parity', '0', '--count'], "21"),
    (['roots', '--type', 'C', '--rank', '2'], "C2: 4 positive roots"),
]


def banner(title):
    """Print a section title between rules."""
    rule = '-' * 60
    print(f"\n{rule}\n  {title}\n{rule}")


def remove_artifacts():
    """Delete everything a previous build left behind."""
    banner("Removing build artifacts")
    for path in (BUILD_DIR, DIST_DIR, GENERATED_SPEC):
        if not path.exists():
            continue
        print(f"  rm {path.relative_to(PROJECT_ROOT)}")
        if path.is_dir():
            shutil.rmtree(path)
        else:
            path.unlink()
    print("  done")


def execute(cmd, capture=False):
    """Run a subprocess from the project root.

    Returns:
        The CompletedProcess, or None when the command could not be started
    """
    try:
        return subprocess.run(cmd, cwd=PROJECT_ROOT, text=True, capture_output=capture)
    except OSError as e:
        print(f"  cannot run {cmd[0]}: {e}")
        return None


def pyinstaller_args():
    """Arguments for a one-file console build of the entry script."""
    args = [
        sys.executable, '-m', 'PyInstaller',
        '--clean', '--noconfirm', '--onefile', '--console',
        '--name', APP_NAME,
        '--distpath', str(DIST_DIR),
        '--workpath', str(BUILD_DIR),
    ]
    for package in COLLECTED_PACKAGES:
        args += ['--collect-submodules', package]
    return args + [str(ENTRY_SCRIPT)]


def freeze():
    """Build the executable with PyInstaller."""
    banner(f"PyInstaller: {ENTRY_SCRIPT.name} -> {EXECUTABLE.relative_to(PROJECT_ROOT)}")
    if importlib.util.find_spec('PyInstaller') is None:
        print("  PyInstaller is not installed in this interpreter; run 'uv sync' first")
        return False
    result = execute(pyinstaller_args())
    if result is None or result.returncode != 0:
        print("  PyInstaller failed")
        return False
    return EXECUTABLE.exists()


def smoke_test():
    """Run the executable on a few commands with known output."""
    banner("Smoke test")
    for args, expected in SMOKE_CHECKS:
        result = execute([str(EXECUTABLE), *args], capture=True)
        if result is None:
            return False
        output = (result.stdout + result.stderr).strip()
        label = ' '.join(args)
        if result.returncode != 0 or expected not in output:
            print(f"  FAIL {label}: got {output!r}, wanted {expected!r}")
            return False
        print(f"  ok   {label}")
    return True


def package_release():
    """Zip (Windows) or tar the executable together with the README."""
    banner("Release archive")
    machine = platform.machine().lower() or 'unknown'
    stem = DIST_DIR / f'{APP_NAME}-{VERSION}-{SYSTEM.lower()}-{machine}'

    staging = BUILD_DIR / 'release'
    shutil.rmtree(staging, ignore_errors=True)
    staging.mkdir(parents=True)
    for source in (EXECUTABLE, PROJECT_ROOT / 'README.md'):
        shutil.copy2(source, staging / source.name)

    archive = shutil.make_archive(str(stem), 'zip' if IS_WINDOWS else 'gztar', root_dir=staging)
    print(f"  wrote {Path(archive).relative_to(PROJECT_ROOT)}")
    return True


def build(archive=True):
    """Run the build steps in order, stopping at the first failure."""
    banner(f"{APP_NAME} {VERSION} on {SYSTEM} ({platform.machine()})")
    steps = [("build", freeze), ("smoke test", smoke_test)]
    if archive:
        steps.append(("archive", package_release))

    for name, step in steps:
        if not step():
            print(f"\nStopped: {name} step failed")
            return False

    banner("Finished")
    for item in sorted(DIST_DIR.iterdir()):
        if item.is_file():
            print(f"  {item.name}  {item.stat().st_size / 2**20:.1f} MiB")
    return True


def main():
    """Parse arguments and run build."""
    parser = argparse.ArgumentParser(
        description=f'Build the {APP_NAME} executable',
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  python build.py              Executable, smoke test and archive
  python build.py --no-archive Executable and smoke test
  python build.py --clean      Remove build artifacts
        """
    )
    parser.add_argument('--clean', action='store_true', help='Remove build artifacts and exit')
    parser.add_argument('--no-archive', action='store_true', help='Skip the release archive')
    args = parser.parse_args()

    if args.clean:
        remove_artifacts()
        return 0

    if sys.prefix == sys.base_prefix:
        print("Warning: not running inside a virtual environment; 'uv run python build.py' uses .venv")

    return 0 if build(archive=not args.no_archive) else 1


if __name__ == '__main__':
    sys.exit(main())
