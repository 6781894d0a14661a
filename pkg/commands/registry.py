from dassl.utils import Registry, check_availability

COMMAND_REGISTRY = Registry("COMMAND")


def build_command(cfg):
    avai_commands = COMMAND_REGISTRY.registered_names()
    check_availability(cfg.COMMAND.NAME, avai_commands)
    print("Loading command: {}".format(cfg.COMMAND.NAME))
    return COMMAND_REGISTRY.get(cfg.COMMAND.NAME)(cfg)
