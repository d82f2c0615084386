from lsfts.settings import Settings, env_value


class PredictionConfig:
    def __init__(self):
        self.settings = Settings()
        self.q_bar = env_value('LSFTS_Q_BAR', int, 10)
        self.eps0 = env_value('LSFTS_EPS0', float, 1e-4)
