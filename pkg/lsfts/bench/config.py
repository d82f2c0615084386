from lsfts.settings import Settings, env_value


class BenchConfig:
    def __init__(self):
        self.settings = Settings()
        self.replicates = env_value('LSFTS_BENCH_REPLICATES', int, None)
