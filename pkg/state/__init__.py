from .run_manifest import RunManifest

__all__ = ['RunManifest']
