"""Tabular Q-learning and deep Q-network agents."""

from __future__ import annotations

from .dqn import DQNAgent, encode_states, one_hot_input_dim, train_dqn
from .network import (
    PolicyNet,
    loss_and_gradients,
    net_forward,
    net_train_step,
    update_target,
)
from .qlearning import QTable, q_choose_action, q_update, train_q
from .replay import ReplayBuffer, Transition
from .rollout import best_of_rollouts, greedy_rollout

__all__ = (
    "DQNAgent",
    "PolicyNet",
    "QTable",
    "ReplayBuffer",
    "Transition",
    "best_of_rollouts",
    "encode_states",
    "greedy_rollout",
    "loss_and_gradients",
    "net_forward",
    "net_train_step",
    "one_hot_input_dim",
    "q_choose_action",
    "q_update",
    "train_dqn",
    "train_q",
)
