#
# (c) Copyright IBM Corp. 2025
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
# http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
#


from abc import ABC
from collections.abc import MutableMapping, Sequence
from inspect import isabstract
from typing import Any, ClassVar, Literal, override

from pydantic import BaseModel, Field, create_model
from pydantic_settings import BaseSettings, PydanticBaseSettingsSource


class _Config(BaseSettings, ABC):
    """Settings root that only honours explicit initialisation values.

    Environment variables, dotenv files and secret directories are ignored so that
    identical command lines always yield identical configuration.
    """

    @classmethod
    @override
    def settings_customise_sources(
        cls,
        settings_cls: type[BaseSettings],
        init_settings,
        env_settings,
        dotenv_settings,
        file_secret_settings,
    ) -> tuple[PydanticBaseSettingsSource, ...]:
        assert (
            init_settings and env_settings and dotenv_settings and file_secret_settings
        )
        return (init_settings,)


class AutoLoadConfig(BaseModel, ABC):
    """Configuration model that registers itself with `.ConfigManager`.

    Importing a module that defines a subclass is enough to make its fields part
    of the next rendered configuration; ``ConfigManager.reload(search={...})``
    then validates overrides against it.

    Attributes
    ----------
    __config_prefix__ : ~`typing.ClassVar`[str]
        Key of the section the fields are rendered under, given as the
        ``_config_prefix`` class keyword. Models sharing a key are merged into one
        section; the empty key places fields on the root.
    """

    __config_prefix__: ClassVar[str]

    @classmethod
    @override
    def __init_subclass__(cls, _config_prefix: str = "", **kwargs):
        super().__init_subclass__(**kwargs)

    @classmethod
    @override
    def __pydantic_init_subclass__(cls, _config_prefix: str = "", **kwargs):
        if not isabstract(cls):
            if not hasattr(cls, "__config_prefix__") or _config_prefix != "":
                cls.__config_prefix__ = _config_prefix
        ConfigManager._add(cls)
        super().__pydantic_init_subclass__(**kwargs)


class ConfigManager:
    """Registry of configuration models and holder of the rendered config."""

    RENDERED_CONFIG_KEY: ClassVar[Literal["__RenderedConfig__"]] = "__RenderedConfig__"

    _models: ClassVar[MutableMapping[str, Sequence[type[AutoLoadConfig]]]] = dict()
    config: ClassVar[Any]

    @classmethod
    def _add(cls, kls: type[AutoLoadConfig]) -> None:
        """File ``kls`` under its prefix unless it is already there."""
        section = tuple(cls._models.get(kls.__config_prefix__, ()))
        if kls in section or kls.__name__.startswith(cls.RENDERED_CONFIG_KEY):
            return
        cls._models[kls.__config_prefix__] = (*section, kls)

    @classmethod
    def _render(cls) -> type[BaseSettings]:
        """Build the settings class from every registered section."""
        root = [_Config, *cls._models.get("", ())]
        sections = {
            key: create_model(f"{cls.RENDERED_CONFIG_KEY}{key}", __base__=tuple(models))
            for key, models in cls._models.items()
            if key
        }
        return create_model(
            cls.RENDERED_CONFIG_KEY,
            __base__=tuple(root),
            __module__=__name__,
            **{
                key: (model, Field(default_factory=model))
                for key, model in sections.items()
            },
        )

    @classmethod
    def reload(cls, **overrides: Any) -> Any:
        """Render the configuration and cache it on `.ConfigManager.config`.

        Parameters
        ----------
        **overrides : Any
            Section values, e.g. ``reload(search={"workers": 4})``. Missing
            values take their defaults; nothing is read from the environment.

        Returns
        -------
        ~`typing.Any`
            The rendered configuration.

        Raises
        ------
        ~`pydantic.ValidationError`
            If an override is unknown or invalid.
        """
        cls.model = cls._render()
        cls.config = cls.model(**overrides)
        return cls.config


    @classmethod
    def current(cls) -> Any:
        """Return the cached config, rendering defaults on first use."""
        if not hasattr(cls, "config"):
            from . import models  # noqa: F401

            return cls.reload()
        return cls.config
