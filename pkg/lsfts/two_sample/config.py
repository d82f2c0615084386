from lsfts.settings import Settings, env_value


class TwoSampleConfig:
    def __init__(self):
        self.settings = Settings()
        self.eps0 = env_value('LSFTS_EPS0', float, 1e-4)
        self.q_bar = env_value('LSFTS_Q_BAR', int, 10)
        self.n_mc = env_value('LSFTS_N_MC', int, 100_000)
