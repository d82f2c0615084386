from lsfts.settings import Settings, env_value


class SimulationConfig:
    def __init__(self):
        self.settings = Settings()
        self.burn_in = env_value('LSFTS_BURN_IN', int, 500)
