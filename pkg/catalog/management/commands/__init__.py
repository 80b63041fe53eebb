# Management commands for catalog app 