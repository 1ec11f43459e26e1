"""
Command Modules
Each module registers its subcommands through setup(cli).
"""
