#pragma once

#include <acoofdm/ber_sweep.hpp>
#include <acoofdm/blocks.hpp>
#include <acoofdm/channel.hpp>
#include <acoofdm/constellation.hpp>
#include <acoofdm/csv.hpp>
#include <acoofdm/discrete_rate.hpp>
#include <acoofdm/error.hpp>
#include <acoofdm/fft.hpp>
#include <acoofdm/gaussian_model.hpp>
#include <acoofdm/grid.hpp>
#include <acoofdm/mc_information.hpp>
#include <acoofdm/quadrature.hpp>
#include <acoofdm/rate_sweep.hpp>
#include <acoofdm/receiver.hpp>
#include <acoofdm/snr.hpp>
#include <acoofdm/transmitter.hpp>
