from .app import ServiceConfig, SessionRegistry, create_app

__all__ = ["ServiceConfig", "SessionRegistry", "create_app"]
