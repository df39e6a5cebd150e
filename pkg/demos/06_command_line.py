"""
The command line
================

Runs the CLI on the fixture files; the same as typing e.g.
``superbrackets verify fixtures/f2.gb``.
"""

import sys
from pathlib import Path

from superbrackets.cli import run_command

FIX = Path(__file__).resolve().parent.parent / "fixtures"

print("$ superbrackets bracket f1.gb --kind poisson --args x,y")
run_command(["bracket", str(FIX / "f1.gb"), "--kind", "poisson", "--args", "x,y"])

print("\n$ superbrackets symbol f4.gb")
run_command(["symbol", str(FIX / "f4.gb")])

print("\n$ superbrackets jacobiator f3.gb --kind ks --order 2 --trials 3")
run_command(["jacobiator", str(FIX / "f3.gb"), "--kind", "ks", "--order", "2", "--trials", "3"])

print("\n$ superbrackets check-master bad_odd.gb")
sys.stdout.flush()
code = run_command(["check-master", str(FIX / "bad_odd.gb")])
print("exit code", code)

print("\n$ superbrackets verify f2.gb --quiet; echo $?")
print(run_command(["verify", str(FIX / "f2.gb"), "--quiet"]))
