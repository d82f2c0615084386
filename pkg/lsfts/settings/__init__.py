from .settings import Settings, env_value

__all__ = ['Settings', 'env_value']
