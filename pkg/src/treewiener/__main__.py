from treewiener.cli import entry

entry()
