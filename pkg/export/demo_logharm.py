#!/usr/bin/env python
# coding: utf-8

# # DEMO: Starlike logharmonic mappings of order alpha

# ## Initial code setup

# In[1]:


import os


# Now we import the code for **this package**.

# In[2]:


import misc
import analytic_fn
import logharmonic_core
import geometry
import radii
import draw


# This is where we can set some parameters like the order and the output directory.

# In[3]:


alpha               = 0.25                                      # Order of starlikeness
radius              = 0.6                                       # Circle to draw the image of
samples             = 720                                       # Points on the circle
output_dir          = 'outputs'                                 # Where to save our output files

os.makedirs(output_dir, exist_ok=True)


# ## Build a map from analytic data
#
# A starlike logharmonic map is fixed by an analytic starlike function and a dilatation with a(0)=0.
# Here we use the Koebe function of order alpha and a(z) = z.

# In[4]:


phi     = analytic_fn.lookup("koebe_alpha", "phi", alpha)
a       = analytic_fn.lookup("a=z", "a")
f0      = logharmonic_core.from_representation(phi, a)

z       = misc.disk_points(8, r_max=0.9)
gap     = (f0(z) - logharmonic_core.distortion_extremal_closed_form(z, alpha)).abs() / f0(z).abs()

print("Closed form agreement: {:.3g}".format(float(gap.max())))


# The map solves the logharmonic equation. We check it with finite differences.

# In[5]:


print("PDE residual:          {:.3g}".format(float(logharmonic_core.pde_residual(f0, z).max())))
print("Jacobian min:          {:.3g}".format(float(logharmonic_core.jacobian(f0, z).min())))


# ## Distortion

# In[6]:


lower, upper = geometry.distortion_bounds(radius, alpha)

print("|f0(-r)| = {:.8g}  lower bound {:.8g}".format(abs(f0(-radius).item()), lower))
print("|f0(r)|  = {:.8g}  upper bound {:.8g}".format(abs(f0(radius).item()), upper))


# ## Close-to-starlike maps are starlike only near the origin
#
# Multiplying by (1+z)/(1-z) gives the map whose starlikeness radius is the closed form.

# In[7]:


F       = logharmonic_core.cst_extremal(alpha)
report  = radii.radius_report("close_to_starlike", alpha, check=True)

print("closed form {:.8f}  numeric {:.8f}  gap {:.2g}".format(report.closed_form, report.numeric_check, report.abs_gap))


# Draw the image of a circle outside that radius. It turns back on itself.

# In[8]:


curve = geometry.image_curve(F, radius, samples)

print("winding {:.3f}  back-turn {:.3f} rad".format(curve.winding_number(), curve.max_backturn()))

draw.write_png(curve, os.path.join(output_dir, "cst_alpha{}.png".format(alpha)))
draw.write_svg(curve, os.path.join(output_dir, "cst_alpha{}.svg".format(alpha)))

with open(os.path.join(output_dir, "cst_alpha{}.csv".format(alpha)), "w", newline="") as fh:
    draw.write_csv(curve, fh)


# ## The Omega_r radius
#
# The two printed closed forms for alpha = 0 disagree. Both are reported.

# In[9]:


omega = geometry.omega_report(0.0)

print("r0 = {:.6f}".format(omega.r0))
print("lambda_alpha(r0)     = {:.6g}".format(omega.lambda_thm23))
print("alternate expression = {:.6g}".format(omega.lambda_alt_expression))
print("discrepancy flagged: {}".format(omega.discrepancy_flag))
