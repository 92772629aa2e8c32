from tangentcone.commands import cone, obstruction, scheme


def register_commands(group):
    for module in (cone, scheme, obstruction):
        for command in module.commands:
            group.add_command(command)
