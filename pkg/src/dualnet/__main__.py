from dualnet.cli import run

run()
